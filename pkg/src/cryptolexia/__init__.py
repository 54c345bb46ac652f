"""CryptoLexia: a gameful learning platform for classical cryptography.

Three layers:

* :mod:`cryptolexia.ciphers` — Caesar, Vigenere and Playfair over
  normalized letter streams, with spacing-preserving output.
* :mod:`cryptolexia.analysis` — working attacks: exhaustive Caesar
  cracking, Vigenere key-length estimation and key recovery, Playfair
  digraph statistics.
* :mod:`cryptolexia.game` / :mod:`cryptolexia.service` — the level,
  story, hint and scoreboard game, served over HTTP with a file-backed
  store.
"""

__version__ = "0.1.0"
