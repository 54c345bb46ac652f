/** Narrow seam over speech synthesis so views never touch the platform
 *  API directly and tests can observe what would be spoken. */
export interface SpeechSynthesizer {
  speak(text: string): void;
}

const browserSynthesizer: SpeechSynthesizer = {
  speak(text: string): void {
    const synth = globalThis.speechSynthesis;
    if (!synth) return; // platform without speech: silently a no-op
    synth.cancel();
    synth.speak(new SpeechSynthesisUtterance(text));
  },
};

let active: SpeechSynthesizer = browserSynthesizer;

export function setSynthesizer(synthesizer: SpeechSynthesizer): void {
  active = synthesizer;
}

export function resetSynthesizer(): void {
  active = browserSynthesizer;
}

export function speak(text: string): void {
  active.speak(text);
}
