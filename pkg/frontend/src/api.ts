import type {
  ChallengeView,
  CreatePlayerResponse,
  LevelView,
  PlayerSettings,
  ScoreboardEntry,
  Verdict,
} from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client for the game API; the base URL and fetch are injectable
 *  so tests can run against a recorded mock. */
export class ApiClient {
  private token: string | null = null;

  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (input, init) => globalThis.fetch(input, init),
  ) {}

  setToken(token: string | null): void {
    this.token = token;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let code = "unknown";
      let message = response.statusText;
      try {
        const payload = (await response.json()) as { error?: { code: string; message: string } };
        if (payload.error) {
          code = payload.error.code;
          message = payload.error.message;
        }
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  createPlayer(handle: string): Promise<CreatePlayerResponse> {
    return this.request("POST", "/api/players", { handle });
  }

  getLevels(): Promise<LevelView[]> {
    return this.request("GET", "/api/levels");
  }

  getChallenges(level: number): Promise<ChallengeView[]> {
    return this.request("GET", `/api/levels/${level}/challenges`);
  }

  submitAnswer(challengeId: string, attempt: string): Promise<Verdict> {
    return this.request("POST", "/api/answers", { challenge_id: challengeId, attempt });
  }

  getHint(challengeId: string, index: number): Promise<{ text: string }> {
    return this.request("GET", `/api/challenges/${challengeId}/hints/${index}`);
  }

  getScoreboard(limit = 10): Promise<ScoreboardEntry[]> {
    return this.request("GET", `/api/scoreboard?limit=${limit}`);
  }

  getSettings(): Promise<PlayerSettings> {
    return this.request("GET", "/api/settings");
  }

  putSettings(settings: PlayerSettings): Promise<PlayerSettings> {
    return this.request("PUT", "/api/settings", settings);
  }
}
