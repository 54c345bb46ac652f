import type { PlayerSettings } from "./types";

export const STORAGE_KEY = "cryptolexia-settings";

/** Accessibility-first defaults: dyslexia-friendly font and generous
 *  spacing are on unless the player opts out. */
export function defaultSettings(): PlayerSettings {
  return {
    dyslexia_font: true,
    letter_spacing: "wide",
    line_height: "relaxed",
    theme: "light",
    tts_enabled: true,
  };
}

export const LETTER_SPACING_CSS: Record<PlayerSettings["letter_spacing"], string> = {
  normal: "normal",
  wide: "0.12em",
  wider: "0.25em",
};

export const LINE_HEIGHT_CSS: Record<PlayerSettings["line_height"], string> = {
  normal: "1.4",
  relaxed: "1.9",
};

/** Push settings into the document: classes drive the theme and font
 *  face, inline styles drive the text metrics so every view (the
 *  scoreboard included) inherits them. */
export function applySettings(settings: PlayerSettings, doc: Document = document): void {
  const body = doc.body;
  body.classList.toggle("dyslexia-font", settings.dyslexia_font);
  body.classList.remove("theme-light", "theme-dark", "theme-high_contrast");
  body.classList.add(`theme-${settings.theme}`);
  body.style.letterSpacing = LETTER_SPACING_CSS[settings.letter_spacing];
  body.style.lineHeight = LINE_HEIGHT_CSS[settings.line_height];
}

export function saveLocalSettings(settings: PlayerSettings, storage: Storage = localStorage): void {
  storage.setItem(STORAGE_KEY, JSON.stringify(settings));
}

/** Read settings saved on this device; used on the welcome screen
 *  before any session exists. */
export function loadLocalSettings(storage: Storage = localStorage): PlayerSettings {
  const raw = storage.getItem(STORAGE_KEY);
  if (!raw) return defaultSettings();
  try {
    return { ...defaultSettings(), ...(JSON.parse(raw) as Partial<PlayerSettings>) };
  } catch {
    return defaultSettings();
  }
}
