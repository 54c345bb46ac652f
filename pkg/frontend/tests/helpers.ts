import { ApiClient } from "../src/api";
import { CryptoLexiaApp } from "../src/app";
import { makeMockApi, type MockApi } from "./mock_api";

export function tick(times = 4): Promise<void> {
  let chain = Promise.resolve();
  for (let i = 0; i < times; i++) {
    chain = chain.then(() => new Promise((resolve) => setTimeout(resolve, 0)));
  }
  return chain;
}

export interface Harness {
  app: CryptoLexiaApp;
  mock: MockApi;
  root: HTMLElement;
}

export function mount(options: { clearStorage?: boolean } = {}): Harness {
  if (options.clearStorage ?? true) window.localStorage.clear();
  document.body.innerHTML = '<main id="app"></main>';
  document.body.removeAttribute("style");
  const root = document.getElementById("app")!;
  const mock = makeMockApi();
  const app = new CryptoLexiaApp(root, new ApiClient("", mock.fetchFn), window.localStorage);
  app.start();
  return { app, mock, root };
}

export function click(root: ParentNode, selector: string, textContains?: string): void {
  const nodes = [...root.querySelectorAll<HTMLElement>(selector)];
  const target = textContains
    ? nodes.find((n) => n.textContent?.includes(textContains))
    : nodes[0];
  if (!target) throw new Error(`nothing to click for ${selector} ${textContains ?? ""}`);
  target.click();
}

export function type(root: ParentNode, selector: string, value: string): void {
  const input = root.querySelector<HTMLInputElement>(selector);
  if (!input) throw new Error(`no input ${selector}`);
  input.value = value;
}

export function submitForm(root: ParentNode): void {
  const form = root.querySelector("form");
  if (!form) throw new Error("no form on screen");
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
}

/** Log in and land on the level map. */
export async function login(harness: Harness, handle = "owl42"): Promise<void> {
  type(harness.root, "#nickname", handle);
  submitForm(harness.root);
  await tick();
}

/** Open level 1 and enter its first challenge. */
export async function openFirstChallenge(harness: Harness): Promise<void> {
  click(harness.root, "button", "Play this level");
  await tick();
  click(harness.root, "button", "Challenge 1");
  await tick();
}
