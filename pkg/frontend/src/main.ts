import { ApiClient } from "./api";
import { CryptoLexiaApp } from "./app";

// Point the client at another origin with VITE_API_BASE at build time,
// e.g. VITE_API_BASE=http://localhost:8473 npm run build
const base = import.meta.env?.VITE_API_BASE ?? "";

const root = document.getElementById("app");
if (root) {
  new CryptoLexiaApp(root, new ApiClient(base)).start();
}
