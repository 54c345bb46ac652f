export type Route = "welcome" | "level_map" | "challenge" | "scoreboard" | "settings";

export interface ViewState {
  route: Route;
  activeSession: string | null; // session token
  activeChallenge: string | null;
}

export function initialState(): ViewState {
  return { route: "welcome", activeSession: null, activeChallenge: null };
}

/** Compute the next view state, enforcing the routing invariants:
 *  everything except the welcome screen needs a session, and the
 *  challenge route needs a challenge. */
export function navigate(state: ViewState, route: Route, challengeId?: string): ViewState {
  if (route !== "welcome" && !state.activeSession) {
    throw new Error(`route ${route} requires a session`);
  }
  if (route === "challenge" && !challengeId) {
    throw new Error("challenge route requires an active challenge");
  }
  return {
    route,
    activeSession: state.activeSession,
    activeChallenge: route === "challenge" ? (challengeId ?? null) : null,
  };
}

export function withSession(state: ViewState, token: string): ViewState {
  return { ...state, activeSession: token };
}
