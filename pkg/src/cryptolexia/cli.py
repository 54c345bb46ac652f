"""Command-line front door: cipher operations, attacks, the worked-example
demo, bank validation and the game server.

Output is plain text, one result per line, no color unless ``--color`` is
given.  Exit codes: 0 success, 1 i/o failure, 2 usage or validation.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import analysis, ciphers, game, service

CIPHERS = ("caesar", "vigenere", "playfair")


@click.group()
@click.option("--color", is_flag=True, default=False, help="Colorize pass/fail markers.")
@click.pass_context
def main(ctx: click.Context, color: bool) -> None:
    """CryptoLexia: classical ciphers, attacks, and the learning game."""
    ctx.ensure_object(dict)
    ctx.obj["color"] = color


def _mark(ctx: click.Context, ok: bool) -> str:
    text = "ok" if ok else "FAIL"
    if ctx.obj.get("color"):
        return click.style(text, fg="green" if ok else "red")
    return text


def _read_source(text: str | None, in_file: str | None) -> str:
    if (text is None) == (in_file is None):
        raise click.UsageError("provide exactly one of --text or --in")
    if text is not None:
        return text
    if in_file == "-":
        return sys.stdin.read()
    try:
        return Path(in_file).read_text(encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


def _parse_key(cipher: str, key: str) -> str:
    if cipher == "caesar":
        try:
            shift = int(key)
        except ValueError:
            raise click.UsageError(f"caesar key must be an integer shift, got {key!r}")
        if not 0 <= shift <= 25:
            raise click.UsageError("caesar shift must be in 0..25")
        return str(shift)
    if not key or any(c not in ciphers.ALPHABET for c in key.lower()):
        raise click.UsageError(f"{cipher} key must be letters only, got {key!r}")
    return key.lower()


@main.command()
@click.argument("cipher", type=click.Choice(CIPHERS))
@click.option("--key", required=True, help="Shift (caesar) or key word.")
@click.option("--text", default=None, help="Plaintext on the command line.")
@click.option("--in", "in_file", default=None, help="Read plaintext from FILE ('-' for stdin).")
def encrypt(cipher: str, key: str, text: str | None, in_file: str | None) -> None:
    """Encrypt text; prints ciphertext spaced like the input."""
    key = _parse_key(cipher, key)
    raw = _read_source(text, in_file)
    click.echo(game.render_ciphertext(cipher, key, raw))


@main.command()
@click.argument("cipher", type=click.Choice(CIPHERS))
@click.option("--key", required=True, help="Shift (caesar) or key word.")
@click.option("--text", default=None, help="Ciphertext on the command line.")
@click.option("--in", "in_file", default=None, help="Read ciphertext from FILE ('-' for stdin).")
def decrypt(cipher: str, key: str, text: str | None, in_file: str | None) -> None:
    """Decrypt text; reuses the input spacing when it has any."""
    key = _parse_key(cipher, key)
    raw = _read_source(text, in_file)
    policy: ciphers.Policy = "playfair" if cipher == "playfair" else "standard"
    normalized = ciphers.normalize(raw, policy)
    try:
        if cipher == "caesar":
            letters = ciphers.caesar_decrypt(normalized.letters, int(key))
        elif cipher == "vigenere":
            letters = ciphers.vigenere_decrypt(normalized.letters, key)
        else:
            letters = ciphers.playfair_decrypt(normalized.letters, key)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    layout = normalized.layout if normalized.layout else (len(letters),) if letters else ()
    click.echo(ciphers.regroup(letters, layout))


@main.group()
def crack() -> None:
    """Attack ciphertexts with frequency statistics."""


@crack.command("caesar")
@click.option("--text", default=None)
@click.option("--in", "in_file", default=None)
def crack_caesar(text: str | None, in_file: str | None) -> None:
    """Rank all 26 shifts by chi-squared fit against English."""
    letters = ciphers.normalize(_read_source(text, in_file)).letters
    try:
        ranking = analysis.caesar_crack(letters)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"{'shift':>5}  {'chi2':>10}  preview")
    for candidate in ranking:
        click.echo(f"{candidate.shift:>5}  {candidate.score:>10.2f}  {candidate.preview}")


@crack.command("vigenere")
@click.option("--text", default=None)
@click.option("--in", "in_file", default=None)
@click.option("--max-keylen", default=10, show_default=True, help="Longest key length to consider.")
def crack_vigenere(text: str | None, in_file: str | None, max_keylen: int) -> None:
    """Estimate the key length by column IoC, then recover the key."""
    letters = ciphers.normalize(_read_source(text, in_file)).letters
    try:
        ranking = analysis.vigenere_key_length(letters, max_keylen)
        best_len = ranking[0][0]
        key = analysis.vigenere_recover_key(letters, best_len)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"{'length':>6}  {'mean IoC':>8}")
    for length, ioc in ranking[:5]:
        click.echo(f"{length:>6}  {ioc:>8.4f}")
    click.echo(f"recovered key: {key}")
    click.echo(f"plaintext preview: {ciphers.vigenere_decrypt(letters, key)[:60]}")


@main.group()
def demo() -> None:
    """Guided demonstrations."""


@demo.command("paper")
@click.pass_context
def demo_paper(ctx: click.Context) -> None:
    """Run the worked textbook examples and verify each output."""
    failures = 0

    def show(label: str, got: str, want: str) -> None:
        nonlocal failures
        ok = got == want
        failures += 0 if ok else 1
        click.echo(f"{label:<44} -> {got:<28} {_mark(ctx, ok)}")

    text = ciphers.normalize("all good things")
    show(
        "caesar encrypt('all good things', 7)",
        ciphers.regroup(ciphers.caesar_encrypt(text, 7), text.layout),
        "hss nvvk aopunz",
    )
    show("vigenere extend('secure', 13)", ciphers.vigenere_extend_key("secure", 13), "securesecures")
    show(
        "vigenere encrypt('all good things', 'secure')",
        ciphers.regroup(ciphers.vigenere_encrypt(text, "secure"), text.layout),
        "spn afsv xjcekk",
    )
    click.echo(
        "    note: the published example prints 'spn afsw xjcekk'; the tableau"
        " gives 'v' at letter 7, so the printed 'w' is treated as a typo."
    )
    matrix = ciphers.playfair_matrix("secure")
    show("playfair matrix('secure')", " ".join(matrix.rows), "secur abdfg hiklm nopqt vwxyz")
    playfair_text = ciphers.normalize("all good things", "playfair")
    plan = ciphers.playfair_digraphs(playfair_text)
    show("playfair digraphs('all good things')", " ".join(plan.pairs), "al lg ox od th in gs")
    letters, layout = ciphers.playfair_encrypt(playfair_text, "secure")
    show("playfair encrypt('all good things', 'secure')", ciphers.regroup(letters, layout), "fhm fpwpb nmhoar")
    for pair, want in (("sh", "an"), ("hk", "il"), ("ed", "cb")):
        got, _ = ciphers.playfair_encrypt(ciphers.normalize(pair, "playfair"), "secure")
        show(f"playfair rule pair '{pair}'", got, want)

    if failures:
        click.echo(f"{failures} example(s) failed", err=True)
        sys.exit(1)


@main.group()
def bank() -> None:
    """Challenge bank tools."""


@bank.command("validate")
@click.option("--bank", "bank_file", required=True, type=click.Path(), help="Bank document to check.")
@click.pass_context
def bank_validate(ctx: click.Context, bank_file: str) -> None:
    """Re-derive every ciphertext and report OK/FAIL per challenge."""
    path = Path(bank_file)
    if not path.exists():
        click.echo(f"error: no such file: {bank_file}", err=True)
        sys.exit(1)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
        declared = [str(raw.get("id", "<missing id>")) for raw in document.get("challenges", [])]
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: unreadable bank: {exc}", err=True)
        sys.exit(2)

    _, problems = game.validate_challenge_bank(path)

    def failed(cid: str) -> bool:
        return any(
            p.startswith(f"{cid}:") or p == f"duplicate challenge id: {cid}" for p in problems
        )

    def attributable(problem: str) -> bool:
        return any(
            problem.startswith(f"{cid}:") or problem == f"duplicate challenge id: {cid}"
            for cid in declared
        )

    for cid in declared:
        click.echo(f"{cid:<16} {_mark(ctx, not failed(cid))}")
    for problem in problems:
        if not attributable(problem):
            click.echo(f"problem: {problem}", err=True)
    if problems:
        sys.exit(2)


@main.command()
@click.option("--port", default=service.DEFAULT_PORT, show_default=True)
@click.option("--store", default=service.DEFAULT_STORE, show_default=True, help="Store file path.")
@click.option("--bank", "bank_file", default=None, help="Bank document (default: bundled bank).")
def serve(port: int, store: str, bank_file: str | None) -> None:
    """Run the game server."""
    from .store import StoreError

    bank_path = Path(bank_file) if bank_file else game.bundled_bank_path()
    try:
        service.run(bank_path, store, port)
    except game.BankError as exc:
        click.echo(f"error: invalid challenge bank: {exc}", err=True)
        sys.exit(2)
    except (StoreError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
