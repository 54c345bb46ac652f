"""Demonstrate why each cipher falls: shift counting, column statistics,
and digraph histograms.

Run:  python demos/attack_walkthrough.py
"""

from cryptolexia import analysis, ciphers

sample = ciphers.normalize(analysis.english_fixture())
print(f"sample corpus: {len(sample.letters)} letters of ordinary English\n")

# Caesar falls to exhaustion: only 26 shifts exist.
ciphertext = ciphers.caesar_encrypt(sample, 7)
ranking = analysis.caesar_crack(ciphertext)
print("caesar crack, best three of the 26 shifts:")
for candidate in ranking[:3]:
    print(f"  shift {candidate.shift:>2}  chi2 {candidate.score:>8.1f}  {candidate.preview}...")
print()

# Vigenere falls to column statistics once the key repeats often enough.
ciphertext = ciphers.vigenere_encrypt(sample, "secure")
print("vigenere key-length ranking (mean column IoC, English is ~0.0667):")
for length, ioc in analysis.vigenere_key_length(ciphertext, 10)[:4]:
    print(f"  length {length:>2}  IoC {ioc:.4f}")
best_len = analysis.vigenere_key_length(ciphertext, 10)[0][0]
print("recovered key:", analysis.vigenere_recover_key(ciphertext, best_len))
print()

# Playfair hides single letters but leaks pair statistics.
playfair_sample = ciphers.normalize(analysis.english_fixture(), "playfair")
letters, _ = ciphers.playfair_encrypt(playfair_sample, "secure")
histogram = analysis.digraph_frequency(letters)
print(f"playfair digraph histogram over {histogram.total} pairs, top five:")
for pair, count in histogram.most_common(5):
    print(f"  {pair}: {count}")
