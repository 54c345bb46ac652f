"""Walk through all three ciphers on the classic workshop phrase.

Run:  python demos/cipher_walkthrough.py
"""

from cryptolexia import ciphers

PHRASE = "all good things"

print(f"plaintext: {PHRASE!r}\n")

# Caesar: one fixed shift for the whole message.
text = ciphers.normalize(PHRASE)
print("normalized letters:", text.letters, "layout:", text.layout)
shifted = ciphers.caesar_encrypt(text, 7)
print("caesar shift 7    :", ciphers.regroup(shifted, text.layout))
print("...and back       :", ciphers.regroup(ciphers.caesar_decrypt(shifted, 7), text.layout))
print()

# Vigenere: the shift changes letter by letter, driven by a key word.
key = "secure"
print("key extended      :", ciphers.vigenere_extend_key(key, len(text.letters)))
encrypted = ciphers.vigenere_encrypt(text, key)
print("vigenere 'secure' :", ciphers.regroup(encrypted, text.layout))
print("...and back       :", ciphers.regroup(ciphers.vigenere_decrypt(encrypted, key), text.layout))
print()

# Playfair: letters pair up and move through a 5x5 key square.
playfair_text = ciphers.normalize(PHRASE, "playfair")
matrix = ciphers.playfair_matrix(key)
print("key square rows   :", " / ".join(matrix.rows))
plan = ciphers.playfair_digraphs(playfair_text)
print("digraphs          :", " ".join(plan.pairs), f"(x inserted at {plan.insertions})")
letters, layout = ciphers.playfair_encrypt(playfair_text, key)
print("playfair 'secure' :", ciphers.regroup(letters, layout))
print("...and back       :", ciphers.playfair_decrypt(letters, key), "(padding letters stay)")
