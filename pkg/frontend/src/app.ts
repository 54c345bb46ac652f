import { ApiClient, ApiError } from "./api";
import { applySettings, defaultSettings, loadLocalSettings, saveLocalSettings } from "./settings";
import { speak } from "./speech";
import { initialState, navigate, withSession, type Route, type ViewState } from "./state";
import type {
  ChallengeView,
  LevelView,
  PlayerSettings,
  ScoreboardEntry,
  SessionView,
} from "./types";

export const SCOREBOARD_POLL_MS = 10_000;

type Attrs = Record<string, string | boolean | ((event: Event) => void)>;

function el(tag: string, attrs: Attrs = {}, children: (Node | string)[] = []): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") {
      node.addEventListener(key.replace(/^on/, ""), value);
    } else if (typeof value === "boolean") {
      if (value) node.setAttribute(key, "");
      if (key === "disabled") (node as HTMLButtonElement).disabled = value;
    } else {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

/** The single-page client.  All data shown is server-authoritative; the
 *  only things kept here are view state and caches of what the API said. */
export class CryptoLexiaApp {
  view: ViewState = initialState();
  session: SessionView | null = null;
  settings: PlayerSettings = defaultSettings();
  levels: LevelView[] = [];
  challengesByLevel: Map<number, ChallengeView[]> = new Map();
  scoreboard: ScoreboardEntry[] = [];
  revealedHints: Map<string, string[]> = new Map();
  expandedLevel: number | null = null;
  private pollTimer: ReturnType<typeof setInterval> | null = null;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private storage: Storage = localStorage,
  ) {}

  start(): void {
    this.settings = loadLocalSettings(this.storage);
    applySettings(this.settings);
    this.render();
  }

  /** Everything the client knows, serialized; answers must never appear here. */
  dumpState(): string {
    return JSON.stringify({
      view: this.view,
      session: this.session,
      settings: this.settings,
      levels: this.levels,
      challenges: [...this.challengesByLevel.values()],
      scoreboard: this.scoreboard,
      revealedHints: [...this.revealedHints.entries()],
    });
  }

  private async goTo(route: Route, challengeId?: string): Promise<void> {
    this.stopPolling();
    this.view = navigate(this.view, route, challengeId);
    if (route === "level_map") {
      this.levels = await this.api.getLevels();
    }
    if (route === "scoreboard") {
      this.scoreboard = await this.api.getScoreboard();
    }
    this.render();
    if (route === "scoreboard") this.startPolling();
  }

  private startPolling(): void {
    this.pollTimer = setInterval(() => {
      void this.api
        .getScoreboard()
        .then((entries) => {
          this.scoreboard = entries;
          if (this.view.route === "scoreboard") this.render();
        })
        .catch(() => undefined); // transient poll failures are invisible
    }, SCOREBOARD_POLL_MS);
  }

  private stopPolling(): void {
    if (this.pollTimer !== null) {
      clearInterval(this.pollTimer);
      this.pollTimer = null;
    }
  }

  private applyAndPersist(settings: PlayerSettings): void {
    this.settings = settings;
    applySettings(settings);
    saveLocalSettings(settings, this.storage);
    if (this.view.activeSession) {
      void this.api.putSettings(settings).catch(() => undefined);
    }
    this.render();
  }

  render(): void {
    this.root.replaceChildren();
    if (this.view.route !== "welcome") this.root.append(this.renderNav());
    switch (this.view.route) {
      case "welcome":
        this.root.append(this.renderWelcome());
        break;
      case "level_map":
        this.root.append(this.renderLevelMap());
        break;
      case "challenge":
        this.root.append(this.renderChallenge());
        break;
      case "scoreboard":
        this.root.append(this.renderScoreboard());
        break;
      case "settings":
        this.root.append(this.renderSettings());
        break;
    }
  }

  private renderNav(): HTMLElement {
    const score = el("span", { class: "nav-score", "aria-live": "polite" }, [
      `${this.session?.handle ?? ""} — ${this.session?.total_score ?? 0} points`,
    ]);
    return el("nav", { "aria-label": "Main navigation" }, [
      el("button", { type: "button", onclick: () => void this.goTo("level_map") }, ["Levels"]),
      el("button", { type: "button", onclick: () => void this.goTo("scoreboard") }, ["Scoreboard"]),
      el("button", { type: "button", onclick: () => void this.goTo("settings") }, ["Settings"]),
      score,
    ]);
  }

  private renderWelcome(): HTMLElement {
    const input = el("input", {
      id: "nickname",
      name: "nickname",
      autocomplete: "off",
      maxlength: "24",
    }) as HTMLInputElement;
    const message = el("p", { role: "alert", class: "message" });
    const form = el("form", {
      onsubmit: (event: Event) => {
        event.preventDefault();
        void this.createPlayer(input.value, message);
      },
    }, [
      el("label", { for: "nickname" }, ["Pick a nickname (not your real name)"]),
      input,
      el("button", { type: "submit" }, ["Start playing"]),
    ]);
    return el("section", { class: "welcome" }, [
      el("h1", {}, ["CryptoLexia"]),
      el("p", {}, [
        "Crack real ciphers, level by level. No accounts, no tracking — just a nickname.",
      ]),
      form,
      message,
    ]);
  }

  private async createPlayer(handle: string, message: HTMLElement): Promise<void> {
    try {
      const created = await this.api.createPlayer(handle.trim());
      this.api.setToken(created.session_token);
      this.session = created.session;
      this.view = withSession(this.view, created.session_token);
      await this.goTo("level_map");
    } catch (error) {
      message.textContent =
        error instanceof ApiError ? error.message : "Could not reach the game server.";
    }
  }

  private renderLevelMap(): HTMLElement {
    const section = el("section", { class: "level-map" }, [el("h1", {}, ["Choose a level"])]);
    for (const level of this.levels) {
      const card = el("article", { class: level.locked ? "level locked" : "level" });
      const title = `Level ${level.number}: ${level.title}`;
      card.append(el("h2", {}, [title]));
      if (level.locked) {
        card.append(
          el("p", { class: "lock-note" }, ["Locked — finish the level before it to open this one."]),
        );
        card.append(
          el("button", { type: "button", disabled: true, "aria-disabled": "true" }, ["Locked"]),
        );
      } else {
        if (level.story_panel) card.append(el("p", { class: "story" }, [level.story_panel]));
        card.append(
          el("button", {
            type: "button",
            "aria-label": `Open ${title}`,
            onclick: () => void this.expandLevel(level.number),
          }, ["Play this level"]),
        );
        if (this.expandedLevel === level.number) {
          card.append(this.renderChallengeList(level.number));
        }
      }
      section.append(card);
    }
    return section;
  }

  private async expandLevel(level: number): Promise<void> {
    this.challengesByLevel.set(level, await this.api.getChallenges(level));
    this.expandedLevel = level;
    this.render();
  }

  private renderChallengeList(level: number): HTMLElement {
    const list = el("ul", { class: "challenges", "aria-label": `Level ${level} challenges` });
    for (const challenge of this.challengesByLevel.get(level) ?? []) {
      const label = `Challenge ${challenge.index + 1} — ${challenge.points} points` +
        (challenge.solved ? " (solved)" : "");
      list.append(
        el("li", {}, [
          el("button", {
            type: "button",
            onclick: () => void this.goTo("challenge", challenge.id),
          }, [label]),
        ]),
      );
    }
    return list;
  }

  private activeChallenge(): ChallengeView | null {
    for (const group of this.challengesByLevel.values()) {
      const found = group.find((c) => c.id === this.view.activeChallenge);
      if (found) return found;
    }
    return null;
  }

  private renderChallenge(): HTMLElement {
    const challenge = this.activeChallenge();
    if (!challenge) {
      return el("p", { role: "alert" }, ["Challenge not loaded. Go back to the level map."]);
    }
    const section = el("section", { class: "challenge" });
    section.append(el("h1", {}, [`Challenge ${challenge.index + 1}`]));
    section.append(el("p", { class: "prompt" }, [challenge.prompt]));
    section.append(
      el("p", { class: "ciphertext", "aria-label": "Secret message" }, [challenge.ciphertext]),
    );
    section.append(el("p", { class: "key-line" }, [describeKey(challenge)]));

    if (this.settings.tts_enabled) {
      section.append(
        el("button", {
          type: "button",
          class: "speak",
          onclick: () => speak(`${challenge.prompt} The secret message is: ${challenge.ciphertext}`),
        }, ["Read aloud"]),
      );
    }

    const hints = this.revealedHints.get(challenge.id) ?? [];
    const hintList = el("ul", { class: "hints", "aria-label": "Hints" });
    for (const hint of hints) hintList.append(el("li", {}, [hint]));
    section.append(hintList);
    if (hints.length < challenge.hint_count) {
      section.append(
        el("button", {
          type: "button",
          class: "hint",
          onclick: () => void this.revealHint(challenge),
        }, [`Reveal a hint (${hints.length} of ${challenge.hint_count} shown)`]),
      );
    }

    const input = el("input", { id: "attempt", name: "attempt", autocomplete: "off" }) as HTMLInputElement;
    const verdict = el("p", { class: "verdict", "aria-live": "polite" });
    const form = el("form", {
      onsubmit: (event: Event) => {
        event.preventDefault();
        void this.submit(challenge, input, verdict);
      },
    }, [
      el("label", { for: "attempt" }, ["Your answer"]),
      input,
      el("button", { type: "submit" }, ["Check answer"]),
    ]);
    section.append(form, verdict);
    return section;
  }

  private async revealHint(challenge: ChallengeView): Promise<void> {
    const shown = this.revealedHints.get(challenge.id) ?? [];
    const hint = await this.api.getHint(challenge.id, shown.length);
    this.revealedHints.set(challenge.id, [...shown, hint.text]);
    this.render();
  }

  private async submit(
    challenge: ChallengeView,
    input: HTMLInputElement,
    verdictNode: HTMLElement,
  ): Promise<void> {
    const verdict = await this.api.submitAnswer(challenge.id, input.value);
    if (this.session) this.session.total_score = verdict.total_score;
    if (verdict.correct) {
      challenge.solved = true;
      input.value = "";
      const unlocked = verdict.newly_unlocked ? ` Level ${verdict.newly_unlocked} is now open!` : "";
      verdictNode.textContent =
        verdict.score_delta > 0
          ? `Correct! +${verdict.score_delta} points — total ${verdict.total_score}.${unlocked}`
          : `Already solved — total stays ${verdict.total_score}.`;
      this.render();
      const fresh = this.root.querySelector(".verdict");
      if (fresh) fresh.textContent = verdictNode.textContent;
    } else {
      // gentle, counter-free retry messaging
      verdictNode.textContent = "Not yet — nothing lost. Take another look, or reveal a hint.";
    }
  }

  private renderScoreboard(): HTMLElement {
    const section = el("section", { class: "scoreboard" }, [el("h1", {}, ["Scoreboard"])]);
    const table = el("table", {}, [
      el("caption", {}, ["Top players, refreshed every ten seconds"]),
    ]);
    const head = el("tr", {}, [
      el("th", { scope: "col" }, ["Rank"]),
      el("th", { scope: "col" }, ["Player"]),
      el("th", { scope: "col" }, ["Points"]),
    ]);
    table.append(el("thead", {}, [head]));
    const body = el("tbody");
    for (const entry of this.scoreboard) {
      const own = entry.handle === this.session?.handle;
      const row = el("tr", own ? { class: "own-row", "aria-current": "true" } : {}, [
        el("td", {}, [String(entry.rank)]),
        el("td", {}, [own ? `${entry.handle} (you)` : entry.handle]),
        el("td", {}, [String(entry.total_score)]),
      ]);
      body.append(row);
    }
    table.append(body);
    section.append(table);
    return section;
  }

  private renderSettings(): HTMLElement {
    const current = this.settings;
    const section = el("section", { class: "settings" }, [el("h1", {}, ["Reading settings"])]);

    const checkbox = (id: string, label: string, checked: boolean, onChange: (value: boolean) => void) => {
      const box = el("input", { type: "checkbox", id, name: id }) as HTMLInputElement;
      box.checked = checked;
      box.addEventListener("change", () => onChange(box.checked));
      return el("p", {}, [box, el("label", { for: id }, [label])]);
    };
    const select = (id: string, label: string, options: string[], value: string, onChange: (value: string) => void) => {
      const picker = el("select", { id, name: id }) as HTMLSelectElement;
      for (const option of options) {
        const item = el("option", { value: option }, [option.replace("_", " ")]) as HTMLOptionElement;
        item.selected = option === value;
        picker.append(item);
      }
      picker.addEventListener("change", () => onChange(picker.value));
      return el("p", {}, [el("label", { for: id }, [label]), picker]);
    };

    section.append(
      checkbox("dyslexia_font", "Dyslexia-friendly font", current.dyslexia_font, (value) =>
        this.applyAndPersist({ ...this.settings, dyslexia_font: value }),
      ),
      select("letter_spacing", "Letter spacing", ["normal", "wide", "wider"], current.letter_spacing,
        (value) => this.applyAndPersist({ ...this.settings, letter_spacing: value as PlayerSettings["letter_spacing"] }),
      ),
      select("line_height", "Line height", ["normal", "relaxed"], current.line_height,
        (value) => this.applyAndPersist({ ...this.settings, line_height: value as PlayerSettings["line_height"] }),
      ),
      select("theme", "Theme", ["light", "dark", "high_contrast"], current.theme,
        (value) => this.applyAndPersist({ ...this.settings, theme: value as PlayerSettings["theme"] }),
      ),
      checkbox("tts_enabled", "Read-aloud button on challenges", current.tts_enabled, (value) =>
        this.applyAndPersist({ ...this.settings, tts_enabled: value }),
      ),
    );
    return section;
  }
}

function describeKey(challenge: ChallengeView): string {
  switch (challenge.key_disclosure.mode) {
    case "full_key":
      return `Key: ${challenge.key_disclosure.material}`;
    case "key_hint":
      return `Key hint: ${challenge.key_disclosure.material}`;
    default:
      return "No key is given — crack it like a codebreaker.";
  }
}
