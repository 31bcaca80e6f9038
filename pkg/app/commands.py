# app/commands.py
# Standard library imports
import logging
from pathlib import Path

# Local imports
from algebra.cochain import hochschild_dim, verify_b_squared, verify_cosimplicial_identities, verify_xi_chain_map
from algebra.cocyclic import cyclic_cohomology_dim, verify_coboundary_image_cyclic, verify_cocyclic_identities
from algebra.crossed import classify_crossed, verify_crossed_structure
from algebra.errors import ParseError
from algebra.group import (
    build_group,
    character_from_exponents,
    enumerate_characters,
    group_from_table,
    trivial_character,
)
from algebra.mha import grouplike_from_character, verify_mha_axioms
from algebra.modpair import classify_mpi
from algebra.report import Check, summary_line
from algebra.zline import hh1_z_report, parse_lambda, parse_q, tau2_escape_check
from app.cache import load_cached, store_cached
from components.formatting import render
from config.settings import XI_TRIALS, ZLINE_WINDOW
from data.table_loader import load_table_file

logger = logging.getLogger(__name__)


# -------------------
# Argument helpers
# -------------------
def load_group(args):
    if getattr(args, "table", None):
        payload = load_table_file(args.table)
        return group_from_table(payload, label=Path(args.table).stem), {"table": payload}
    if not getattr(args, "group", None):
        raise ParseError("one of --group or --table is required")
    return build_group(args.group), args.group


def parse_sigma(G, text):
    """``trivial`` or ``char:k1,k2,...`` (exponents on the canonical generators)."""
    text = (text or "trivial").strip()
    if text == "trivial":
        return trivial_character(G)
    if text.startswith("char:"):
        try:
            exponents = [int(k) for k in text[len("char:"):].split(",")]
        except ValueError:
            raise ParseError(f"character exponents must be integers, got {text!r}") from None
        return character_from_exponents(G, exponents)
    raise ParseError(f"unknown sigma descriptor {text!r} (expected trivial or char:k1,k2,...)")


def sigma_label(sigma):
    return "char:" + ",".join(str(k) for k in sigma.generator_exponents())


# -------------------
# Verb handlers: each returns (payload, rows) with rows=None for non-tabular output
# -------------------
def run_verify(args):
    G, _ = load_group(args)
    checks = [c.to_json() for c in verify_mha_axioms(G)]
    sigmas = [parse_sigma(G, args.sigma)] if args.sigma else enumerate_characters(G)
    for sigma in sigmas:
        label = sigma_label(sigma)
        suite = [Check("grouplike_certificate", grouplike_from_character(sigma).certificate)]
        suite += verify_cosimplicial_identities(G, sigma, args.max_degree)
        suite += verify_b_squared(G, sigma, args.max_degree)
        suite += verify_cocyclic_identities(G, sigma, args.max_degree)
        suite.append(verify_coboundary_image_cyclic(G, sigma))
        for n in range(min(args.max_degree, 2) + 1):
            ok = verify_xi_chain_map(G, sigma, n, trials=args.xi_trials)
            suite.append(Check("xi_chain_map", ok, degree=n, counterexample=None if ok else ()))
        logger.info(summary_line(f"{G.label} sigma {label}", suite))
        for c in suite:
            entry = c.to_json()
            entry["sigma"] = label
            checks.append(entry)
    return checks, None


def run_characters(args):
    G, _ = load_group(args)
    rows = []
    for i, chi in enumerate(enumerate_characters(G)):
        rows.append({
            "index": i,
            "exponents": chi.generator_exponents(),
            "N": chi.order,
            "values": {G.names[g]: k for g, k in enumerate(chi.exponents)},
        })
    return rows, rows


def run_mpi(args):
    G, _ = load_group(args)
    rows = classify_mpi(G)
    return rows, rows


def run_hochschild(args):
    G, _ = load_group(args)
    sigma = parse_sigma(G, args.sigma)
    result = hochschild_dim(G, sigma, args.degree).to_json()
    return result, [result]


def run_cyclic(args):
    G, _ = load_group(args)
    sigma = parse_sigma(G, args.sigma)
    result = cyclic_cohomology_dim(G, sigma, args.degree).to_json()
    return result, [result]


def run_zline(args):
    lam = parse_lambda(args.lam)
    payload = {"hh1": hh1_z_report(lam, args.window)}
    row = {k: v for k, v in payload["hh1"].items() if k not in ("lambda", "beta")}
    row["lambda"] = args.lam
    if args.q:
        escapes, witness = tau2_escape_check(parse_q(args.q, lam, args.window), lam, args.window)
        payload["tau2"] = {"q": args.q, "escapes": escapes, "witness": witness}
        row.update({"q": args.q, "escapes": escapes, "witness_size": len(witness)})
    return payload, [row]


def run_crossed(args):
    payload = classify_crossed(args.N, args.classify)
    payload["structure"] = [c.to_json() for c in verify_crossed_structure(args.N)]
    return payload, payload["rows"]


# -------------------
# Dispatch
# -------------------
def build_request(args):
    """The canonical description of a command, used as the cache key."""
    params = {k: getattr(args, k) for k in args.param_names}
    group = None
    if getattr(args, "table", None):
        group = {"table": load_table_file(args.table)}
    elif getattr(args, "group", None):
        group = args.group
    return {"verb": args.verb, "group": group, "sigma": getattr(args, "sigma", None), "params": params}


def execute(args):
    """Run the handler of ``args.verb`` (through the cache when --cache is given) and render it."""
    if args.format == "csv" and not args.tabular:
        raise ParseError(f"{args.verb} has no tabular output; use --format json")
    request = build_request(args)
    output = load_cached(args.cache, request) if args.cache else None
    if output is None:
        logger.info("Computing %s", args.verb)
        payload, rows = args.handler(args)
        output = {"payload": payload, "rows": rows}
        if args.cache:
            store_cached(args.cache, request, output)
    return render(output["payload"], args.format, output["rows"])


def _add_common(parser, tabular=True):
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--cache", metavar="DIR", help="directory for cached results")
    parser.set_defaults(tabular=tabular)


def _add_group(parser):
    parser.add_argument("--group", help="group descriptor: Z<n>, S3, D4, Q8 or products like Z2xZ4")
    parser.add_argument("--table", metavar="FILE", help="JSON multiplication table instead of --group")


def _positive(text):
    value = int(text)
    if value < 0:
        raise ValueError(text)
    return value


def register_commands(subparsers):
    """Attach every verb to the CLI, each with its handler and cache parameters."""
    p = subparsers.add_parser("verify", help="run the axiom and identity suites")
    _add_group(p)
    p.add_argument("--sigma", help="trivial or char:k1,k2,... (default: every character)")
    p.add_argument("--max-degree", type=_positive, default=2)
    p.add_argument("--xi-trials", type=_positive, default=XI_TRIALS)
    _add_common(p, tabular=False)
    p.set_defaults(handler=run_verify, param_names=["max_degree", "xi_trials"])

    p = subparsers.add_parser("characters", help="list the characters of a group")
    _add_group(p)
    _add_common(p)
    p.set_defaults(handler=run_characters, param_names=[])

    p = subparsers.add_parser("mpi", help="modular pairs in involution")
    _add_group(p)
    _add_common(p)
    p.set_defaults(handler=run_mpi, param_names=[])

    for verb, handler, text in (
        ("hochschild", run_hochschild, "Hochschild Hopf-cohomology dimension"),
        ("cyclic", run_cyclic, "cyclic cohomology dimension"),
    ):
        p = subparsers.add_parser(verb, help=text)
        _add_group(p)
        p.add_argument("--sigma", default="trivial")
        p.add_argument("--degree", type=_positive, required=True)
        _add_common(p)
        p.set_defaults(handler=handler, param_names=["degree"])

    p = subparsers.add_parser("zline", help="HH^1 and the tau_2 escape check for G = Z")
    p.add_argument("--lambda", dest="lam", required=True, help="p/q or zeta:N:k")
    p.add_argument("--window", type=_positive, default=ZLINE_WINDOW)
    p.add_argument("--q", help="step, finite:<json map> or geom:a,b")
    _add_common(p)
    p.set_defaults(handler=run_zline, param_names=["lam", "window", "q"])

    p = subparsers.add_parser("crossed", help="classifications on C(Z_N^2) x| Z_2")
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--classify", choices=["grouplike", "mpi"], default="grouplike")
    _add_common(p)
    p.set_defaults(handler=run_crossed, param_names=["N", "classify"])
