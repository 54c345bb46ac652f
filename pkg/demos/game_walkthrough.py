"""Play a whole game session against the engine, no server needed.

Run:  python demos/game_walkthrough.py
"""

from cryptolexia import game

bank = game.load_challenge_bank(game.bundled_bank_path())
state = game.GameState()
player = game.create_session(state, "demo_player")

print("levels:")
for level in bank.levels:
    print(f"  {level.number}. {level.title} ({level.cipher})")
print()

first = bank.by_level(1)[0]
print(f"challenge {first.id}: {first.prompt}")
print(f"ciphertext: {first.ciphertext}")
print("hint:", game.get_hint(bank, first.id, 0))

verdict = game.submit_answer(bank, state, player, first.id, "definitely wrong")
print(f"wrong guess  -> correct={verdict.correct}, score={verdict.total_score} (no penalty, nothing recorded)")

verdict = game.submit_answer(bank, state, player, first.id, "all good things")
print(f"right answer -> +{verdict.score_delta}, score={verdict.total_score}")

for challenge in bank.by_level(1)[1:]:
    from cryptolexia.ciphers import caesar_decrypt, normalize, regroup

    letters = normalize(challenge.ciphertext)
    answer = caesar_decrypt(letters.letters, int(challenge.key))
    verdict = game.submit_answer(bank, state, player, challenge.id, answer)
    print(f"{challenge.id}: +{verdict.score_delta}, score={verdict.total_score}, unlocked={verdict.newly_unlocked}")

print()
print("scoreboard:")
for entry in game.scoreboard(state, 5):
    print(f"  #{entry.rank} {entry.handle}: {entry.total_score}")
