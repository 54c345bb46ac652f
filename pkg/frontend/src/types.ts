// Shapes of the JSON the game API sends and receives.  Field names are
// lower_snake_case on the wire; they are kept as-is here so payloads can
// be used without mapping.

export interface SessionView {
  handle: string;
  unlocked: number;
  total_score: number;
  solved: string[];
}

export interface CreatePlayerResponse {
  session_token: string;
  session: SessionView;
}

export interface LevelView {
  number: number;
  cipher: string;
  title: string;
  locked: boolean;
  story_panel: string | null;
}

export interface KeyDisclosure {
  mode: "full_key" | "key_hint" | "none";
  material: string | null;
}

export interface ChallengeView {
  id: string;
  index: number;
  prompt: string;
  ciphertext: string;
  key_disclosure: KeyDisclosure;
  hint_count: number;
  points: number;
  solved: boolean;
}

export interface Verdict {
  correct: boolean;
  score_delta: number;
  total_score: number;
  newly_unlocked: number | null;
}

export interface ScoreboardEntry {
  rank: number;
  handle: string;
  total_score: number;
}

export interface PlayerSettings {
  dyslexia_font: boolean;
  letter_spacing: "normal" | "wide" | "wider";
  line_height: "normal" | "relaxed";
  theme: "light" | "dark" | "high_contrast";
  tts_enabled: boolean;
}
