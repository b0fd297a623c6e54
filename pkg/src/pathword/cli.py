"""Command-line interface.

Exit codes: 0 success, 1 domain error (one-line diagnostic on stderr),
2 usage error.  Secrets (path specs) can come from a file or stdin so they
stay out of shell history.
"""

from __future__ import annotations

import functools
import json
import re
import sys

import click
import httpx

from . import analysis
from .alphabet import Alphabet, make_alphabet
from .diagram import (
    decode_diagram,
    diagram_to_dict,
    encode_diagram,
    generate_diagram,
    render_diagram,
    validate_diagram,
)
from .errors import PathwordError
from .path import derive, format_path, parse_path, random_path, render_path_overlay
from .service.core import DEFAULT_TTL_SECONDS

_TIMEFRAME_RE = re.compile(r"^\s*(\d+(?:\.\d+)?)\s*([shdy]?)\s*$")
_TIMEFRAME_UNITS = {"": 1.0, "s": 1.0, "h": 3600.0, "d": 86400.0, "y": 3600.0 * 24 * 365}


def parse_timeframe(text: str) -> float:
    """Seconds from a humane spec: plain number, or Ns/Nh/Nd/Ny (365-day years)."""
    m = _TIMEFRAME_RE.match(text)
    if not m:
        raise PathwordError(f"cannot parse timeframe {text!r} (use e.g. 90s, 12h, 30d, 1y)")
    return float(m.group(1)) * _TIMEFRAME_UNITS[m.group(2)]


def _domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PathwordError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
        except httpx.HTTPStatusError as exc:
            detail = ""
            try:
                detail = exc.response.json().get("detail", "")
            except ValueError:
                pass
            click.echo(
                f"error: server returned {exc.response.status_code}"
                + (f": {detail}" if detail else ""),
                err=True,
            )
            sys.exit(1)
        except httpx.HTTPError as exc:
            click.echo(f"error: cannot reach server: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _alphabet_option(value: str) -> Alphabet:
    if "," in value:
        return make_alphabet([tok for tok in value.split(",") if tok])
    return make_alphabet(value)


def _read_path_spec(path_spec: str | None, path_file: str | None):
    if (path_spec is None) == (path_file is None):
        raise click.UsageError("give exactly one of --path or --path-file (use '-' for stdin)")
    if path_file is not None:
        text = sys.stdin.read() if path_file == "-" else open(path_file).read()
    else:
        text = path_spec
    return parse_path(text)


def _write_out(text: str, out: str) -> None:
    if out == "-":
        click.echo(text, nl=not text.endswith("\n"))
    else:
        with open(out, "w") as fh:
            fh.write(text)


@click.group()
def cli():
    """Grid diagrams, secret paths, strength analysis, and the auth service."""


@cli.command("gen-diagram")
@click.option("--alphabet", "-a", "alphabet_spec", required=True,
              help="Built-in name (hex, digit-pairs) or comma-separated letters.")
@click.option("--rows", type=int, required=True)
@click.option("--cols", type=int, required=True)
@click.option("--seed", default=None, help="Deterministic seed; omit for OS entropy.")
@click.option("--out", default="-", help="Output file (default stdout).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@_domain_errors
def cmd_gen_diagram(alphabet_spec, rows, cols, seed, out, fmt):
    """Generate a random diagram covering the whole alphabet."""
    alphabet = _alphabet_option(alphabet_spec)
    d = generate_diagram(alphabet, rows, cols, seed=seed)
    if fmt == "json":
        _write_out(json.dumps(diagram_to_dict(d), indent=2) + "\n", out)
    else:
        _write_out(encode_diagram(d), out)


@cli.command("validate")
@click.argument("diagram_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@_domain_errors
def cmd_validate(diagram_file, fmt):
    """Report letter coverage and frequencies for a diagram document."""
    d = decode_diagram(open(diagram_file).read(), strict_coverage=False)
    report = validate_diagram(d)
    if fmt == "json":
        click.echo(json.dumps({
            "covered": report.covered,
            "missing_letters": list(report.missing_letters),
            "letter_frequencies": report.letter_frequencies,
        }, indent=2))
    else:
        click.echo(f"covered: {'yes' if report.covered else 'no'}")
        if report.missing_letters:
            click.echo("missing: " + " ".join(report.missing_letters))
        width = max(len(t) for t in d.alphabet.letters)
        for letter, count in report.letter_frequencies.items():
            click.echo(f"  {letter.ljust(width)}  {count}")


@cli.command("render")
@click.argument("diagram_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--path", "path_spec", default=None, help="Overlay visit ordinals for this path.")
@click.option("--path-file", default=None, help="Read the overlay path from a file ('-' = stdin).")
@_domain_errors
def cmd_render(diagram_file, path_spec, path_file):
    """Print a diagram as a fixed-width table, optionally with path ordinals."""
    d = decode_diagram(open(diagram_file).read(), strict_coverage=False)
    if path_spec is None and path_file is None:
        click.echo(render_diagram(d))
    else:
        p = _read_path_spec(path_spec, path_file)
        click.echo(render_path_overlay(d, p))


@cli.command("derive")
@click.argument("diagram_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--path", "path_spec", default=None, help='Path spec, e.g. "6x6: (1,1) (1,2)".')
@click.option("--path-file", default=None, help="Read the path spec from a file ('-' = stdin).")
@_domain_errors
def cmd_derive(diagram_file, path_spec, path_file):
    """Print the password the path reads off the diagram."""
    d = decode_diagram(open(diagram_file).read(), strict_coverage=False)
    p = _read_path_spec(path_spec, path_file)
    click.echo(derive(p, d).text)


@cli.command("random-path")
@click.option("--rows", type=int, required=True)
@click.option("--cols", type=int, required=True)
@click.option("--length", "-n", type=int, required=True)
@click.option("--seed", default=None, help="Deterministic seed; omit for OS entropy.")
@_domain_errors
def cmd_random_path(rows, cols, length, seed):
    """Print a uniformly random injective path spec."""
    click.echo(format_path(random_path((rows, cols), length, seed=seed)))


@cli.command("analyze")
@click.option("--alphabet-size", "-A", type=int, required=True)
@click.option("--length", "-n", type=int, required=True)
@click.option("--rate", type=float, required=True, help="Attacker guesses per second.")
@click.option("--timeframe", required=True, help="Time frame, e.g. 90s, 12h, 30d, 1y.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@_domain_errors
def cmd_analyze(alphabet_size, length, rate, timeframe, fmt):
    """Strength report: counts, ratio bound chain, adequacy verdict."""
    model = analysis.AttackerModel(
        guesses_per_second=rate, time_frame_seconds=parse_timeframe(timeframe)
    )
    report = analysis.strength_report(alphabet_size, length, model)
    if fmt == "json":
        click.echo(json.dumps(report.to_dict(), indent=2))
        return
    click.echo(f"alphabet size        {report.alphabet_size}")
    click.echo(f"length               {report.length}")
    click.echo(f"total strings        {report.total_strings}")
    click.echo(f"expected guesses     {report.expected_guesses}")
    click.echo(f"injective sequences  {report.injective_sequences}")
    if report.ratio_exact is None:
        click.echo("ratio                not applicable (length exceeds alphabet size)")
    else:
        click.echo(
            f"ratio                {float(report.ratio_exact):.6f}"
            f" >= power bound {report.bound_power:.6f}"
            f" (asymptotic form {report.bound_exp_approx:.6f})"
        )
    click.echo(f"expected time        {report.expected_time_seconds:.6g} s")
    click.echo(f"adequate             {'yes' if report.adequate else 'no'}")
    click.echo(f"min adequate length  {report.min_adequate_length}")


@cli.command("oracle")
@click.argument("diagram_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--length", "-n", type=int, required=True)
@click.option("--budget", type=int, default=analysis.DEFAULT_ORACLE_BUDGET,
              help="Maximum number of sequences to enumerate.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@_domain_errors
def cmd_oracle(diagram_file, length, budget, fmt):
    """Exhaustively enumerate injective cell sequences and count distinct passwords."""
    d = decode_diagram(open(diagram_file).read(), strict_coverage=False)
    report = analysis.enumerate_oracle(d, length, budget=budget)
    if fmt == "json":
        click.echo(json.dumps(report.to_dict(), indent=2))
        return
    click.echo(f"length              {report.n}")
    click.echo(f"sequences           {report.sequence_count}")
    click.echo(f"distinct passwords  {report.distinct_passwords}")
    click.echo(f"lower bound         {report.lower_bound}")


@cli.command("serve")
@click.option("--store", "store_dir", default=None, type=click.Path(file_okay=False),
              help="State directory (created if missing).")
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
@click.option("--ttl", type=float, default=None, help="Challenge TTL in seconds.")
@click.option("--config", "config_file", default=None, type=click.Path(exists=True, dir_okay=False),
              help="JSON config with keys store, host, port, ttl; flags override.")
@_domain_errors
def cmd_serve(store_dir, host, port, ttl, config_file):
    """Run the HTTP service (master key from PATHWORD_MASTER_KEY)."""
    import uvicorn

    from .service.app import create_app
    from .service.core import AuthService
    from .service.store import ServiceStore

    config = {}
    if config_file:
        config = json.loads(open(config_file).read())
    store_dir = store_dir or config.get("store")
    if not store_dir:
        raise click.UsageError("give --store or a config file with a 'store' key")
    host = host or config.get("host", "127.0.0.1")
    port = port if port is not None else int(config.get("port", 8000))
    ttl = ttl if ttl is not None else float(config.get("ttl", DEFAULT_TTL_SECONDS))

    service = AuthService(ServiceStore(store_dir), ttl_seconds=ttl)
    uvicorn.run(create_app(service), host=host, port=port, log_level="warning")


def _client(server: str) -> httpx.Client:
    return httpx.Client(base_url=server, timeout=10.0)


@cli.command("enroll")
@click.option("--server", required=True, help="Service base URL, e.g. http://127.0.0.1:8000")
@click.option("--user", required=True)
@click.option("--label", required=True)
@click.option("--path", "path_spec", default=None)
@click.option("--path-file", default=None, help="Read the path spec from a file ('-' = stdin).")
@click.option("--alphabet", "-a", "alphabet_spec", default="digit-pairs", show_default=True)
@_domain_errors
def cmd_enroll(server, user, label, path_spec, path_file, alphabet_spec):
    """Enroll a secret path; the grid shape is taken from the path spec."""
    p = _read_path_spec(path_spec, path_file)
    alphabet = _alphabet_option(alphabet_spec)
    body = {
        "user": user,
        "label": label,
        "path": {"rows": p.rows, "cols": p.cols, "steps": [[r, c] for r, c in p.steps]},
        "grid_params": {
            "alphabet": {"name": alphabet.name} if alphabet.name else {"letters": list(alphabet.letters)},
            "rows": p.rows,
            "cols": p.cols,
        },
    }
    with _client(server) as client:
        resp = client.post("/enroll", json=body)
        resp.raise_for_status()
    click.echo(f"enrolled {user}/{label} ({p.length} steps on {p.rows}x{p.cols})")


@cli.command("challenge")
@click.option("--server", required=True)
@click.option("--user", required=True)
@click.option("--label", required=True)
@click.option("--diagram-out", default=None, type=click.Path(dir_okay=False),
              help="Also write the challenge diagram as a text document.")
@_domain_errors
def cmd_challenge(server, user, label, diagram_out):
    """Request a fresh challenge; prints {challenge_id, diagram, expires_at} JSON."""
    with _client(server) as client:
        resp = client.post("/challenge", json={"user": user, "label": label})
        resp.raise_for_status()
    payload = resp.json()
    if diagram_out:
        from .diagram import diagram_from_dict

        d = diagram_from_dict(payload["diagram"], strict_coverage=False)
        with open(diagram_out, "w") as fh:
            fh.write(encode_diagram(d))
    click.echo(json.dumps(payload, indent=2))


@cli.command("verify")
@click.option("--server", required=True)
@click.option("--challenge-id", required=True)
@click.option("--password", default=None)
@click.option("--password-file", default=None, help="Read the password from a file ('-' = stdin).")
@_domain_errors
def cmd_verify(server, challenge_id, password, password_file):
    """Submit a password for a challenge; prints the outcome.

    Exit status is 0 only for an accepted outcome.
    """
    if (password is None) == (password_file is None):
        raise click.UsageError("give exactly one of --password or --password-file ('-' = stdin)")
    if password_file is not None:
        password = sys.stdin.read() if password_file == "-" else open(password_file).read()
    password = password.strip()
    with _client(server) as client:
        resp = client.post("/verify", json={"challenge_id": challenge_id, "password": password})
        resp.raise_for_status()
    outcome = resp.json()["outcome"]
    click.echo(outcome)
    if outcome != "accepted":
        sys.exit(1)


@cli.command("revoke")
@click.option("--server", required=True)
@click.option("--user", required=True)
@click.option("--label", required=True)
@_domain_errors
def cmd_revoke(server, user, label):
    """Remove an enrollment and its pending challenges."""
    with _client(server) as client:
        resp = client.delete(f"/enrollment/{user}/{label}")
        resp.raise_for_status()
    click.echo(f"revoked {user}/{label}")


def main():
    cli(prog_name="pathword")


if __name__ == "__main__":
    main()
