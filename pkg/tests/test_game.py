import copy
import json
import random

import pytest

from cryptolexia.game import (
    BankError,
    DuplicateHandleError,
    GameState,
    InvalidHandleError,
    LockedLevelError,
    NoSuchHintError,
    UnknownChallengeError,
    bundled_bank_path,
    create_session,
    get_hint,
    load_challenge_bank,
    padded_answer,
    points_for,
    scoreboard,
    submit_answer,
    validate_challenge_bank,
)


@pytest.fixture(scope="module")
def bank():
    return load_challenge_bank(bundled_bank_path())


@pytest.fixture()
def bank_doc():
    return json.loads(bundled_bank_path().read_text())


def write_bank(tmp_path, doc):
    path = tmp_path / "bank.json"
    path.write_text(json.dumps(doc))
    return path


def fresh_player(state: GameState, handle: str = "owl42"):
    return create_session(state, handle)


def solve_level(bank, state, session, level: int):
    for challenge in bank.by_level(level):
        verdict = submit_answer(bank, state, session, challenge.id, plaintext_of(bank, challenge.id))
        assert verdict.correct
    return session


def plaintext_of(bank, challenge_id: str) -> str:
    # Canonical letters are a valid attempt; normalization accepts them.
    return bank.challenges[challenge_id].answer


class TestBankLoading:
    def test_bundled_bank_loads(self, bank):
        assert len(bank.challenges) == 9
        assert [level.number for level in bank.levels] == [1, 2, 3]
        assert [level.cipher for level in bank.levels] == ["caesar", "vigenere", "playfair"]
        for level in (1, 2, 3):
            assert [c.index for c in bank.by_level(level)] == [0, 1, 2]

    def test_every_challenge_round_trips_through_the_ciphers(self, bank):
        # Already enforced at load; assert the invariant explicitly, in
        # both directions.
        from cryptolexia import ciphers
        from cryptolexia.game import padded_answer, render_ciphertext

        for challenge in bank.challenges.values():
            derived = render_ciphertext(challenge.cipher, challenge.key, challenge.answer)
            assert derived.replace(" ", "") == challenge.ciphertext.replace(" ", "")
            letters = challenge.ciphertext.replace(" ", "")
            if challenge.cipher == "caesar":
                assert ciphers.caesar_decrypt(letters, int(challenge.key)) == challenge.answer
            elif challenge.cipher == "vigenere":
                assert ciphers.vigenere_decrypt(letters, challenge.key) == challenge.answer
            else:
                # decryption keeps pad letters; it must equal the padded stream
                assert ciphers.playfair_decrypt(letters, challenge.key) == padded_answer(challenge)

    def test_tampered_ciphertext_names_the_challenge(self, tmp_path, bank_doc):
        bank_doc["challenges"][0]["ciphertext"] = "xxx yyyy zzzzzz"
        bank_or_none, problems = validate_challenge_bank(write_bank(tmp_path, bank_doc))
        assert bank_or_none is None
        assert any(p.startswith("caesar-0:") for p in problems)

    def test_empty_bank_rejected(self, tmp_path, bank_doc):
        bank_doc["challenges"] = []
        with pytest.raises(BankError, match="no challenges"):
            load_challenge_bank(write_bank(tmp_path, bank_doc))

    def test_duplicate_ids_rejected(self, tmp_path, bank_doc):
        bank_doc["challenges"].append(dict(bank_doc["challenges"][0]))
        _, problems = validate_challenge_bank(write_bank(tmp_path, bank_doc))
        assert any("duplicate challenge id: caesar-0" == p for p in problems)

    def test_level_cipher_mismatch_rejected(self, tmp_path, bank_doc):
        bank_doc["challenges"][0]["level"] = 2
        _, problems = validate_challenge_bank(write_bank(tmp_path, bank_doc))
        assert any("does not use" in p for p in problems)

    def test_malformed_document_rejected(self, tmp_path):
        path = tmp_path / "bank.json"
        path.write_text("{ not json")
        with pytest.raises(BankError, match="cannot read"):
            load_challenge_bank(path)

    def test_missing_hints_rejected(self, tmp_path, bank_doc):
        bank_doc["challenges"][0]["hints"] = []
        _, problems = validate_challenge_bank(write_bank(tmp_path, bank_doc))
        assert any("at least one hint" in p for p in problems)


class TestPointsFor:
    @pytest.mark.parametrize("level,index,expected", [(1, 0, 50), (3, 2, 170), (2, 1, 110)])
    def test_values(self, level, index, expected):
        assert points_for(level, index) == expected

    def test_monotone_in_index_and_level(self):
        for level in (1, 2, 3):
            for index in range(5):
                assert points_for(level, index + 1) > points_for(level, index)
                if level < 3:
                    assert points_for(level + 1, index) > points_for(level, index)

    def test_next_level_always_pays_more_for_equal_or_later_index(self):
        for i in range(4):
            for j in range(i + 1):
                assert points_for(2, i) > points_for(1, j)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            points_for(4, 0)
        with pytest.raises(ValueError):
            points_for(1, -1)


class TestSubmitAnswer:
    def test_first_solve_scores(self, bank):
        state = GameState()
        session = fresh_player(state)
        verdict = submit_answer(bank, state, session, "caesar-0", "All Good Things!")
        assert (verdict.correct, verdict.score_delta, verdict.total_score) == (True, 50, 50)
        assert verdict.newly_unlocked is None

    def test_repeat_solve_is_free(self, bank):
        state = GameState()
        session = fresh_player(state)
        submit_answer(bank, state, session, "caesar-0", "all good things")
        verdict = submit_answer(bank, state, session, "caesar-0", "all good things")
        assert (verdict.correct, verdict.score_delta, verdict.total_score) == (True, 0, 50)

    def test_wrong_answer_changes_nothing(self, bank):
        state = GameState()
        session = fresh_player(state)
        before = copy.deepcopy(session)
        verdict = submit_answer(bank, state, session, "caesar-0", "bad guess")
        assert verdict.correct is False
        assert verdict.score_delta == 0
        assert session == before
        assert state.solve_ordinal == 0

    def test_comparison_forgives_case_and_spacing(self, bank):
        state = GameState()
        session = fresh_player(state)
        verdict = submit_answer(bank, state, session, "caesar-1", "  THE old   Palace, in the north!")
        assert verdict.correct

    def test_playfair_accepts_padded_and_unpadded(self, bank):
        state = GameState()
        session = fresh_player(state)
        session.unlocked = 3
        challenge = bank.challenges["playfair-1"]
        padded = padded_answer(challenge)
        assert padded != challenge.answer  # this answer has an inserted x
        assert submit_answer(bank, state, session, "playfair-1", challenge.answer).correct
        state2 = GameState()
        session2 = fresh_player(state2, "owl43")
        session2.unlocked = 3
        assert submit_answer(bank, state2, session2, "playfair-1", padded).correct

    def test_unknown_challenge(self, bank):
        state = GameState()
        session = fresh_player(state)
        with pytest.raises(UnknownChallengeError):
            submit_answer(bank, state, session, "nope-0", "anything")

    def test_locked_level_rejected(self, bank):
        state = GameState()
        session = fresh_player(state)
        with pytest.raises(LockedLevelError):
            submit_answer(bank, state, session, "vigenere-0", "the attack begins at dawn")

    def test_completing_a_level_unlocks_the_next(self, bank):
        state = GameState()
        session = fresh_player(state)
        challenges = bank.by_level(1)
        for challenge in challenges[:-1]:
            assert submit_answer(bank, state, session, challenge.id, challenge.answer).newly_unlocked is None
        verdict = submit_answer(bank, state, session, challenges[-1].id, challenges[-1].answer)
        assert verdict.newly_unlocked == 2
        assert session.unlocked == 2

    def test_finishing_level_three_unlocks_nothing(self, bank):
        state = GameState()
        session = fresh_player(state)
        for level in (1, 2, 3):
            solve_level(bank, state, session, level)
        assert session.unlocked == 3
        assert session.total_score == sum(c.points for c in bank.challenges.values())


class TestHints:
    def test_hint_text(self, bank):
        assert get_hint(bank, "caesar-0", 0).startswith("Every letter slid")

    def test_out_of_range(self, bank):
        with pytest.raises(NoSuchHintError, match="no such hint"):
            get_hint(bank, "caesar-0", 99)

    def test_unknown_challenge(self, bank):
        with pytest.raises(UnknownChallengeError):
            get_hint(bank, "nope-0", 0)

    def test_hint_leaves_sessions_untouched(self, bank):
        state = GameState()
        session = fresh_player(state)
        before = copy.deepcopy(session)
        get_hint(bank, "caesar-0", 1)
        assert session == before


class TestSessions:
    def test_invalid_handles_rejected(self):
        state = GameState()
        for handle in ("", "has space", "x" * 25, "émile", "a.b"):
            with pytest.raises(InvalidHandleError):
                create_session(state, handle)

    def test_duplicate_handle_rejected(self):
        state = GameState()
        create_session(state, "owl42")
        with pytest.raises(DuplicateHandleError):
            create_session(state, "owl42")

    def test_fresh_session_shape(self):
        state = GameState()
        session = create_session(state, "owl42")
        assert (session.unlocked, session.total_score, session.solved) == (1, 0, {})


class TestScoreboard:
    def test_ties_go_to_whoever_scored_first(self, bank):
        state = GameState()
        a, b, c = (fresh_player(state, h) for h in ("anna", "bart", "cleo"))
        # anna reaches 110 before cleo does; bart scores highest.
        submit_answer(bank, state, a, "caesar-0", "all good things")
        submit_answer(bank, state, a, "caesar-1", "the old palace in the north")
        submit_answer(bank, state, c, "caesar-0", "all good things")
        submit_answer(bank, state, c, "caesar-1", "the old palace in the north")
        for cid, answer in [
            ("caesar-0", "all good things"),
            ("caesar-1", "the old palace in the north"),
            ("caesar-2", "search the cellar for more letters"),
        ]:
            submit_answer(bank, state, b, cid, answer)
        entries = scoreboard(state, 10)
        assert [(e.rank, e.handle) for e in entries] == [(1, "bart"), (2, "anna"), (3, "cleo")]
        assert entries[1].total_score == entries[2].total_score == 110

    def test_empty_store(self):
        assert scoreboard(GameState(), 5) == []

    def test_limit_one(self, bank):
        state = GameState()
        fresh_player(state, "solo")
        entries = scoreboard(state, 1)
        assert len(entries) == 1 and entries[0].rank == 1

    def test_limit_must_be_positive(self):
        with pytest.raises(ValueError):
            scoreboard(GameState(), 0)

    def test_ranks_are_contiguous(self, bank):
        state = GameState()
        for handle in ("p1", "p2", "p3", "p4"):
            fresh_player(state, handle)
        assert [e.rank for e in scoreboard(state, 3)] == [1, 2, 3]


class TestRandomPlay:
    def test_score_conservation_over_random_command_streams(self, bank):
        rng = random.Random(20240817)
        ids = sorted(bank.challenges)
        for _ in range(60):
            state = GameState()
            session = fresh_player(state)
            for _ in range(rng.randrange(1, 40)):
                cid = rng.choice(ids)
                challenge = bank.challenges[cid]
                attempt = challenge.answer if rng.random() < 0.5 else "not it"
                try:
                    submit_answer(bank, state, session, cid, attempt)
                except LockedLevelError:
                    continue
                total = sum(bank.challenges[c].points for c in session.solved)
                assert session.total_score == total
                assert set(session.solved) <= set(ids)
            # progression: nothing above the unlocked level is ever solved
            assert all(bank.challenges[c].level <= session.unlocked for c in session.solved)
