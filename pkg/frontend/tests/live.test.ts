import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";

// Integration against a real running server:
//   cryptolexia serve --port 8731 --store /tmp/live_store.json
//   LIVE_API=http://localhost:8731 npx vitest run tests/live.test.ts
const base = process.env.LIVE_API;

describe.skipIf(!base)("live server", () => {
  it("plays a whole level through the real API", async () => {
    const api = new ApiClient(base!, (url, init) => fetch(url, init));
    const handle = `live${Date.now() % 100000}`;
    const created = await api.createPlayer(handle);
    api.setToken(created.session_token);

    const levels = await api.getLevels();
    expect(levels).toHaveLength(3);
    expect(levels[0]!.locked).toBe(false);

    const challenges = await api.getChallenges(1);
    expect(challenges[0]!.ciphertext).toBe("hss nvvk aopunz");

    const verdict = await api.submitAnswer("caesar-0", "all good things");
    expect(verdict).toMatchObject({ correct: true, score_delta: 50, total_score: 50 });

    const hint = await api.getHint("caesar-0", 0);
    expect(hint.text.length).toBeGreaterThan(10);

    const board = await api.getScoreboard(50);
    expect(board.some((e) => e.handle === handle && e.total_score === 50)).toBe(true);

    const settings = await api.putSettings({
      dyslexia_font: true,
      letter_spacing: "wider",
      line_height: "relaxed",
      theme: "dark",
      tts_enabled: true,
    });
    expect(settings.theme).toBe("dark");
    expect((await api.getSettings()).letter_spacing).toBe("wider");
  });
});
