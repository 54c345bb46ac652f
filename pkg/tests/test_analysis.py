import pytest
from hypothesis import given, strategies as st

from cryptolexia.analysis import (
    DigraphHistogram,
    LetterFrequencyTable,
    caesar_crack,
    chi_squared_score,
    digraph_frequency,
    english_fixture,
    english_frequencies,
    index_of_coincidence,
    vigenere_key_length,
    vigenere_recover_key,
)
from cryptolexia.ciphers import ALPHABET, NormalizedText, caesar_encrypt, normalize, vigenere_encrypt

letters_st = st.text(alphabet=ALPHABET, min_size=2, max_size=80)

UNIFORM = LetterFrequencyTable.from_raw([1.0] * 26)


@pytest.fixture(scope="module")
def fixture_letters() -> str:
    return normalize(english_fixture()).letters


def as_text(letters: str) -> NormalizedText:
    return NormalizedText(letters, (len(letters),) if letters else ())


class TestFrequencyTable:
    def test_bundled_table_is_normalized(self):
        table = english_frequencies()
        assert len(table.freq) == 26
        assert abs(sum(table.freq) - 1.0) <= 1e-9
        assert table.freq[4] == max(table.freq)  # e tops English

    def test_comments_and_whitespace_accepted(self):
        body = "# header\n" + "\n".join("1.0  # letter" for _ in range(26))
        table = LetterFrequencyTable.from_text(body)
        assert table.freq == tuple([1 / 26] * 26)

    def test_wrong_count_rejected(self):
        with pytest.raises(ValueError):
            LetterFrequencyTable.from_text("0.5 0.5")

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            LetterFrequencyTable.from_raw([-1.0] + [1.0] * 25)


class TestChiSquared:
    def test_zero_when_observed_matches_expected(self):
        assert chi_squared_score(ALPHABET, UNIFORM) == pytest.approx(0.0)

    def test_unlikely_text_scores_high(self):
        assert chi_squared_score("zzzz") > 100

    def test_reordering_does_not_change_the_score(self):
        assert chi_squared_score("listen") == chi_squared_score("silent")

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            chi_squared_score("")

    @given(letters_st)
    def test_nonnegative(self, letters):
        assert chi_squared_score(letters) >= 0.0


class TestCaesarCrack:
    def test_recovers_shift_seven(self, fixture_letters):
        sentence = fixture_letters[:80]
        ciphertext = caesar_encrypt(as_text(sentence), 7)
        ranking = caesar_crack(ciphertext)
        assert ranking[0].shift == 7
        assert ranking[0].preview == sentence[:40]

    def test_recovers_shift_zero(self, fixture_letters):
        assert caesar_crack(fixture_letters[:80])[0].shift == 0

    def test_single_letter_still_ranks_all_shifts(self):
        ranking = caesar_crack("a")
        assert sorted(c.shift for c in ranking) == list(range(26))

    def test_scores_sorted_ascending(self, fixture_letters):
        ranking = caesar_crack(caesar_encrypt(as_text(fixture_letters[:80]), 5))
        scores = [c.score for c in ranking]
        assert scores == sorted(scores)

    def test_true_shift_scores_like_the_plaintext(self, fixture_letters):
        plain = fixture_letters[:80]
        ranking = caesar_crack(caesar_encrypt(as_text(plain), 9))
        at_true = next(c for c in ranking if c.shift == 9)
        assert at_true.score == pytest.approx(chi_squared_score(plain))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            caesar_crack("")


class TestIndexOfCoincidence:
    def test_single_letter_text(self):
        assert index_of_coincidence("aaaa") == pytest.approx(1.0)

    def test_all_distinct(self):
        assert index_of_coincidence(ALPHABET) == pytest.approx(0.0)

    def test_english_fixture_band(self, fixture_letters):
        assert 0.06 <= index_of_coincidence(fixture_letters[:500]) <= 0.075

    def test_short_input_rejected(self):
        with pytest.raises(ValueError):
            index_of_coincidence("a")

    @given(letters_st, st.randoms())
    def test_permutation_invariant(self, letters, rng):
        shuffled = list(letters)
        rng.shuffle(shuffled)
        assert index_of_coincidence("".join(shuffled)) == pytest.approx(
            index_of_coincidence(letters)
        )

    @given(letters_st)
    def test_doubling_counts_never_lowers_it(self, letters):
        doubled = letters + letters
        before = index_of_coincidence(letters)
        after = index_of_coincidence(doubled)
        assert before <= after + 1e-12
        assert after <= 1.0


class TestVigenereKeyLength:
    def test_finds_length_six(self, fixture_letters):
        ciphertext = vigenere_encrypt(as_text(fixture_letters), "secure")
        assert vigenere_key_length(ciphertext, 10)[0][0] == 6

    def test_degenerate_single_letter_key(self, fixture_letters):
        ciphertext = vigenere_encrypt(as_text(fixture_letters), "a")
        assert vigenere_key_length(ciphertext, 10)[0][0] == 1

    def test_length_one_entry_equals_whole_text_ioc(self, fixture_letters):
        ranking = dict(vigenere_key_length(fixture_letters, 8))
        assert ranking[1] == pytest.approx(index_of_coincidence(fixture_letters))

    def test_multiples_lose_to_the_true_length(self, fixture_letters):
        ciphertext = vigenere_encrypt(as_text(fixture_letters), "secure")
        assert vigenere_key_length(ciphertext, 20)[0][0] == 6

    @pytest.mark.parametrize("max_len", [0, 21])
    def test_max_len_bounds(self, max_len):
        with pytest.raises(ValueError):
            vigenere_key_length("ab" * 30, max_len)

    def test_text_too_short_rejected(self):
        with pytest.raises(ValueError):
            vigenere_key_length("abcdef", 4)


class TestVigenereRecoverKey:
    def test_recovers_secure(self, fixture_letters):
        ciphertext = vigenere_encrypt(as_text(fixture_letters), "secure")
        assert vigenere_recover_key(ciphertext, 6) == "secure"

    def test_caesar_degenerate_recovers_the_shift_letter(self, fixture_letters):
        ciphertext = caesar_encrypt(as_text(fixture_letters), 7)
        assert vigenere_recover_key(ciphertext, 1) == "h"

    def test_stable_under_rotation_by_the_key_length(self, fixture_letters):
        ciphertext = vigenere_encrypt(as_text(fixture_letters), "secure")
        rotated = ciphertext[6:] + ciphertext[:6]
        assert vigenere_recover_key(rotated, 6) == vigenere_recover_key(ciphertext, 6)

    def test_empty_column_rejected(self):
        with pytest.raises(ValueError):
            vigenere_recover_key("abc", 4)

    def test_zero_key_len_rejected(self):
        with pytest.raises(ValueError):
            vigenere_recover_key("abc", 0)


class TestDigraphFrequency:
    def test_golden_ciphertext_pairs(self):
        histogram = digraph_frequency("fhmfpwpbnmhoar")
        assert histogram.total == 7
        assert len(histogram.counts) == 7
        assert set(histogram.counts.values()) == {1}

    def test_repeated_pair(self):
        histogram = digraph_frequency("abab")
        assert histogram.counts == {"ab": 2}
        assert histogram.total == 2

    def test_empty(self):
        histogram = digraph_frequency("")
        assert histogram.counts == {}
        assert histogram.total == 0

    def test_odd_length_rejected(self):
        with pytest.raises(ValueError):
            digraph_frequency("abc")

    def test_j_rejected(self):
        with pytest.raises(ValueError):
            digraph_frequency("ja")

    def test_most_common_orders_by_count_then_pair(self):
        histogram = digraph_frequency("ababcd")
        assert histogram.most_common(2) == [("ab", 2), ("cd", 1)]

    def test_total_mismatch_rejected(self):
        with pytest.raises(ValueError):
            DigraphHistogram({"ab": 2}, 1)

    @given(st.text(alphabet="abcdefghiklmnopqrstuvwxyz", min_size=0, max_size=60).filter(lambda s: len(s) % 2 == 0))
    def test_totals_reconstruct(self, letters):
        histogram = digraph_frequency(letters)
        assert histogram.total == len(letters) // 2
        assert sum(histogram.counts.values()) == histogram.total
