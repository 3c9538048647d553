"""Command-line front end: ``equisig <command> ...``.

Every command builds a RunReport, prints a human-readable summary and, with
``--json OUT``, writes the report as JSON.  Results are exact; ``--decimal``
adds floating-point renderings for reading only.  The exit status is 0 exactly
when every verification the command performed passed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from pathlib import Path
from typing import Any, Optional

from . import __version__
from .artin import artin_certificate, transfer_identity_check
from .charseries import coth_identity_check
from .exactnum import CyclotomicNumber, format_rational
from .grouprep import (
    FiniteAbelianGroup,
    Subgroup,
    VirtualRep,
    all_subgroups,
    evaluate,
    induce,
    inflate,
    lambda_minus1,
    lambda_total,
    quotient,
    restrict,
    subgroup_generated,
)
from .gsig import (
    HypothesisViolation,
    MissingFixedData,
    SchemaError,
    cup_form,
    decompose_localized_class,
    dedekind_sum,
    g_signature,
    load_fixed_data_dict,
    reciprocity_check,
    signature_from_cohomology,
)
from .lens import LensSpace, find_exotic_pairs, homotopy_equivalent, isometric, rho_vector
from .primeloc import (
    InvalidPrime,
    lemma_GtoH_check,
    localize_restriction_module,
    prime_ideal,
    segal_vanishing,
    support,
)


class UsageError(ValueError):
    pass


@dataclass
class RunReport:
    command: list[str]
    input_digest: str
    results: dict = field(default_factory=dict)
    verified: bool = True
    summary: list[str] = field(default_factory=list)
    timing: float = 0.0

    def check(self, name: str, ok: bool) -> bool:
        self.results.setdefault("checks", {})[name] = bool(ok)
        self.verified = self.verified and bool(ok)
        return ok

    def to_dict(self) -> dict:
        # timing stays outside the deterministic payload
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "verified": self.verified,
            "results": self.results,
            "timing_seconds": round(self.timing, 6),
        }


# ---------------------------------------------------------------------------
# parsing helpers

def parse_group(text: str) -> FiniteAbelianGroup:
    text = (text or "").strip()
    if text in ("", "1", "trivial"):
        return FiniteAbelianGroup(())
    try:
        return FiniteAbelianGroup(tuple(int(x) for x in text.split(",")))
    except ValueError as exc:
        raise UsageError(f"bad group {text!r}: give invariant factors like 2,4") from exc


def parse_element(text: str) -> tuple[int, ...]:
    text = (text or "").strip()
    if text == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad element {text!r}: give residues like 1,0") from exc


def parse_prime(text: str) -> tuple[tuple[int, ...], int]:
    if ";" not in text:
        raise UsageError(f"bad prime {text!r}: expected \"g1,g2,...;p\"")
    g, p = text.split(";", 1)
    try:
        return parse_element(g), int(p.strip() or 0)
    except ValueError as exc:
        raise UsageError(f"bad residual characteristic in {text!r}") from exc


def parse_subgroup(group: FiniteAbelianGroup, text: Optional[str]) -> Subgroup:
    """Generators separated by ';', e.g. "1,0;0,2"; empty means trivial."""
    if text is None or text.strip() == "":
        return Subgroup.trivial(group)
    gens = [parse_element(t) for t in text.split(";") if t.strip()]
    return Subgroup.generated_by(group, gens)


def parse_rep(group: FiniteAbelianGroup, text: str) -> VirtualRep:
    """'regular', 'one', 'zero', 'chars:1;2' (sum of characters) or a JSON object."""
    text = text.strip()
    if text == "regular":
        return VirtualRep.regular(group)
    if text == "one":
        return VirtualRep.one(group)
    if text == "zero":
        return VirtualRep.zero(group)
    if text.startswith("chars:"):
        total = VirtualRep.zero(group)
        for a in parse_char_list(text[len("chars:"):]):
            total = total + VirtualRep.char(group, a)
        return total
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad representation {text!r}") from exc
    if not isinstance(data, dict):
        raise UsageError("a representation in JSON is an object {\"a1,a2\": coefficient}")
    return VirtualRep.from_dict(group, data)


def parse_char_list(text: str) -> list[tuple[int, ...]]:
    return [parse_element(t) for t in text.split(";") if t.strip()]


def cyc_payload(z: CyclotomicNumber, decimal: bool) -> dict:
    out = {"exact": z.to_dict(), "text": format_rational(z.to_fraction()) if z.is_rational() else str(z)}
    if decimal:
        c = complex(z)
        out["decimal"] = f"{c.real:.12g}{c.imag:+.12g}i"
    return out


def _shown(payload: dict) -> str:
    if "decimal" in payload:
        return f"{payload['text']}  (~ {payload['decimal']})"
    return payload["text"]


def _digest(payload: bytes) -> str:
    return hashlib.sha256(payload).hexdigest()


def _load_json_input(path: str) -> tuple[Any, bytes]:
    raw = _read_input(path)
    try:
        return json.loads(raw), raw
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc


def _read_input(path: str) -> bytes:
    if path.startswith("bundled:"):
        name = path[len("bundled:"):]
        res = resources.files("equisig") / "data" / f"{name}.json"
        if not res.is_file():
            raise UsageError(f"no bundled input named {name!r}; see 'equisig selftest --list'")
        return res.read_bytes()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def bundled_inputs() -> list[str]:
    return sorted(p.name[:-5] for p in (resources.files("equisig") / "data").iterdir() if p.name.endswith(".json"))


# ---------------------------------------------------------------------------
# commands

def command_ring(args, report: RunReport):
    group = parse_group(args.group)
    op = args.op
    if op == "mul":
        if len(args.rep) != 2:
            raise UsageError("mul needs exactly two --rep")
        result = parse_rep(group, args.rep[0]) * parse_rep(group, args.rep[1])
        _emit_rep(report, result)
    elif op == "eval":
        if len(args.rep) != 1 or args.element is None:
            raise UsageError("eval needs one --rep and --element")
        z = evaluate(parse_rep(group, args.rep[0]), parse_element(args.element))
        report.results["value"] = cyc_payload(z, args.decimal)
        report.summary.append(_shown(report.results["value"]))
    elif op == "restrict":
        h = parse_subgroup(group, args.subgroup)
        result = restrict(parse_rep(group, _single(args.rep)), h)
        report.results["subgroup_group"] = list(h.group.factors)
        _emit_rep(report, result)
    elif op == "induce":
        h = parse_subgroup(group, args.subgroup)
        result = induce(parse_rep(h.group, _single(args.rep)), h)
        _emit_rep(report, result)
    elif op == "inflate":
        n = parse_subgroup(group, args.subgroup)
        q = quotient(group, n)
        result = inflate(parse_rep(q.group, _single(args.rep)), q)
        report.results["quotient_group"] = list(q.group.factors)
        _emit_rep(report, result)
    elif op == "lambda":
        chars = parse_char_list(args.chars or "")
        result = lambda_minus1(group, chars) if args.kind == "minus1" else lambda_total(group, chars)
        _emit_rep(report, result)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown ring operation {op}")


def _single(reps: list[str]) -> str:
    if len(reps) != 1:
        raise UsageError("this operation needs exactly one --rep")
    return reps[0]


def _emit_rep(report: RunReport, v: VirtualRep):
    report.results["group"] = list(v.group.factors)
    report.results["rep"] = v.to_dict()
    report.results["text"] = str(v)
    report.summary.append(str(v))


def command_prime(args, report: RunReport):
    group = parse_group(args.group)
    g, p = parse_prime(args.prime)
    prime = prime_ideal(group, g, p)
    h = support(prime)
    gtoh = lemma_GtoH_check(prime)
    report.results["prime"] = prime.to_dict()
    report.results["support"] = h.to_dict()
    report.results["support_order"] = h.order
    report.results["minimal_primes"] = [list(x) for x in prime.minimal_primes]
    report.results["lemma_GtoH"] = gtoh.to_dict()
    expected = p == 0 or gtoh.support.index % p != 0
    report.check("GtoH certified exactly when p = 0 or p prime to |G/H|", gtoh.certified == expected)
    vanishing = {}
    agree = True
    for k in all_subgroups(group):
        v = segal_vanishing(prime, k)
        direct, _ = localize_restriction_module(prime, k)
        agree = agree and v == direct
        vanishing[str(k)] = v
    report.results["segal_vanishing"] = vanishing
    report.check("segal vanishing agrees with explicit localization", agree)
    report.summary += [f"prime {prime}", f"support {h} (order {h.order})", f"G -> H: {gtoh.reason}"]


def command_artin(args, report: RunReport):
    group = parse_group(args.group)
    cert = artin_certificate(group)
    report.results["certificate"] = cert.to_dict()
    report.check("sum a Ind = |G| 1", cert.verify())
    rng = random.Random(args.seed)
    ok = True
    for _ in range(args.trials):
        v = VirtualRep(group, {a: rng.randint(-3, 3) for a in group.characters()})
        ok = ok and transfer_identity_check(group, v, cert)
    report.check(f"transfer identity on {args.trials} random reps", ok)
    report.summary.append(f"|G| * 1 = sum over {len(cert.terms)} induced characters:")
    for t in cert.terms:
        report.summary.append(f"  {t.coefficient:+d} * Ind from {t.subgroup} of character {list(t.character)}")


def _load_data(args, report: RunReport):
    if not args.input:
        raise UsageError("--input FILE (or bundled:NAME) is required")
    data, raw = _load_json_input(args.input)
    report.input_digest = _digest(raw)
    return load_fixed_data_dict(data)


def command_gsign(args, report: RunReport):
    data = _load_data(args, report)
    group = data.group
    elements = [parse_element(args.element)] if args.element is not None else list(group.elements())
    values = {}
    for g in elements:
        key = ",".join(map(str, group.element(g)))
        values[key] = cyc_payload(g_signature(data, g), args.decimal)
        report.summary.append(f"Sign(g = ({key}), M) = {_shown(values[key])}")
    report.results["name"] = data.name
    report.results["values"] = values
    if args.element is None:
        ok = True
        for g in group.elements():
            m = group.element_order(g)
            z = g_signature(data, g)
            for k in range(1, m):
                if gcd(k, m) == 1:
                    ok = ok and g_signature(data, group.scale(k, g)) == z.galois(k)
        report.check("Galois equivariance", ok)
    try:
        whole = data.whole_component()
    except (MissingFixedData, SchemaError):
        whole = None
    if whole is not None and (args.element is None or not any(group.element(parse_element(args.element)))):
        sig = signature_from_cohomology(cup_form(whole.intersection)) if data.dimension % 4 == 0 else 0
        report.results["cup_form_signature"] = sig
        report.check("g = 1 matches the cup-form signature",
                     g_signature(data, group.identity) == CyclotomicNumber.rational(sig))


def command_localize(args, report: RunReport):
    data = _load_data(args, report)
    if not args.prime:
        raise UsageError("--prime \"g;p\" is required")
    g, p = parse_prime(args.prime)
    prime = prime_ideal(data.group, g, p)
    at = parse_element(args.element) if args.element is not None else None
    rep = decompose_localized_class(data, prime, at)
    report.results["report"] = rep.to_dict()
    report.check("orbit sizes sum to the component count", rep.orbit_sizes_consistent())
    report.check("fiber-class denominators are units", rep.all_units())
    if rep.total is not None and not rep.support.is_trivial():
        if subgroup_generated(data.group, at).elements == rep.support.elements:
            report.check("orbit pairings sum to g_signature", rep.total == g_signature(data, at))
    report.summary.append(rep.to_text())


def _parse_lens(text: str) -> LensSpace:
    """'n:q1,q2,...'"""
    try:
        n, w = text.split(":", 1)
        return LensSpace(int(n), tuple(int(x) for x in w.split(",")))
    except ValueError as exc:
        raise UsageError(f"bad lens space {text!r}: expected n:q1,q2,...  ({exc})") from exc


def command_lens(args, report: RunReport):
    if args.mode == "search":
        n_max, m = args.n_max, args.m
        if args.input:
            spec, raw = _load_json_input(args.input)
            report.input_digest = _digest(raw)
            n_max, m = int(spec.get("n_max", n_max)), int(spec.get("m", m))
        pairs = find_exotic_pairs(n_max, m)
        report.results["pairs"] = [p.to_dict() for p in pairs]
        ok = all(homotopy_equivalent(p.first, p.second) and not isometric(p.first, p.second) for p in pairs)
        report.check("every pair is homotopy equivalent and not isometric", ok)
        report.summary.append(f"{len(pairs)} pairs with n <= {n_max}, dimension {2 * m + 1}")
        for p in pairs:
            report.summary.append(
                f"  {p.first.classical_name()} ~ {p.second.classical_name()}: differ at k = {p.k}"
                f"{'' if p.invariantly_distinct else ' (equal up to reindexing)'}"
            )
        return
    spaces = [_parse_lens(t) for t in args.lens]
    if args.mode == "rho":
        for lens in spaces:
            rho = rho_vector(lens)
            report.results.setdefault("rho", {})[str(lens)] = {
                str(k): cyc_payload(rho[k], args.decimal) for k in range(1, lens.n)
            }
            report.check(f"Galois equivariance of {lens}", rho.galois_equivariant())
            report.summary.append(f"{lens}:")
            report.summary += [f"  k = {k}: {_shown(report.results['rho'][str(lens)][str(k)])}"
                               for k in range(1, lens.n)]
    else:
        if len(spaces) != 2:
            raise UsageError("compare needs exactly two --lens")
        a, b = spaces
        he, iso = homotopy_equivalent(a, b), isometric(a, b)
        same = rho_vector(a) == rho_vector(b) if a.n == b.n and a.m == b.m else False
        report.results.update({"homotopy_equivalent": he, "isometric": iso, "equal_rho": same})
        report.check("isometric implies homotopy equivalent", he or not iso)
        report.summary.append(f"{a} vs {b}: homotopy equivalent {he}, isometric {iso}, equal rho {same}")


def command_dedekind(args, report: RunReport):
    s = dedekind_sum(args.q, args.n)
    report.results["value"] = format_rational(s)
    report.summary.append(format_rational(s))
    if args.q > 0:
        report.results["reciprocity"] = reciprocity_check(args.q, args.n)
        report.check("reciprocity", report.results["reciprocity"])


def command_selftest(args, report: RunReport):
    if args.list:
        report.results["bundled"] = bundled_inputs()
        report.summary += bundled_inputs()
        return
    from .models import cp2_action, hirzebruch_models, model_cup_form, s2_rotation

    d = args.truncation
    report.check(f"coth identity, m <= 8, truncation <= {d}",
                 all(coth_identity_check(a, m, t).holds for m in range(2, 9) for a in range(1, m) for t in range(d + 1)))
    report.check("S^2 rotations give 0", all(g_signature(s2_rotation(n), (k,)).is_zero()
                                             for n in range(2, 8) for k in range(1, n)))
    one = CyclotomicNumber.rational(1)
    report.check("CP^2 weights (0,1,2) give 1", all(g_signature(cp2_action(n), (k,)) == one
                                                    for n in range(3, 8) for k in range(1, n)))
    report.check("g = 1 gives the Hirzebruch signature", all(
        g_signature(m, ()) == CyclotomicNumber.rational(signature_from_cohomology(model_cup_form(m)))
        for m in hirzebruch_models()))
    report.check("dedekind s(1,3) = 1/18", format_rational(dedekind_sum(1, 3)) == "1/18")
    report.check("Artin certificate for Z/2 x Z/2", artin_certificate(FiniteAbelianGroup((2, 2))).verify())
    pairs = find_exotic_pairs(7, 1)
    report.check("lens pair L(7;1), L(7;2)", any(p.first.weights == (1, 1) and p.second.weights == (1, 2) for p in pairs))
    for name, ok in report.results["checks"].items():
        report.summary.append(f"{'PASS' if ok else 'FAIL'}  {name}")


COMMANDS = {
    "ring": command_ring,
    "prime": command_prime,
    "artin": command_artin,
    "gsign": command_gsign,
    "localize": command_localize,
    "lens": command_lens,
    "dedekind": command_dedekind,
    "selftest": command_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="OUT", help="write the report as JSON")
    common.add_argument("--decimal", action="store_true", help="add decimal renderings (display only)")
    common.add_argument("--input", metavar="FILE", help="input JSON file, or bundled:NAME")
    common.add_argument("--element", metavar="G", help='group element as residues, e.g. "1,0"')
    common.add_argument("--prime", metavar="G;P", help='prime ideal as "g1,g2;p"')
    common.add_argument("--truncation", metavar="D", type=int, default=6, help="series truncation degree")

    parser = argparse.ArgumentParser(prog="equisig", description="Exact equivariant signature computations.")
    parser.add_argument("--version", action="version", version=f"equisig {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", parents=[common], help="representation ring operations")
    ring.add_argument("op", choices=["mul", "eval", "restrict", "induce", "inflate", "lambda"])
    ring.add_argument("--group", default="", help="invariant factors, e.g. 2,4")
    ring.add_argument("--rep", action="append", default=[],
                      help="'regular', 'one', 'zero', 'chars:1;2' or JSON {\"a\": c}")
    ring.add_argument("--subgroup", help='generators separated by ";", e.g. "1,0;0,2"')
    ring.add_argument("--chars", help='characters separated by ";" (for lambda)')
    ring.add_argument("--kind", choices=["minus1", "total"], default="minus1")

    prime = sub.add_parser("prime", parents=[common], help="prime ideal, support and the G -> H lemma")
    prime.add_argument("--group", default="")

    artin = sub.add_parser("artin", parents=[common], help="Artin induction certificate")
    artin.add_argument("--group", default="")
    artin.add_argument("--trials", type=int, default=20)
    artin.add_argument("--seed", type=int, default=0)

    sub.add_parser("gsign", parents=[common], help="G-signature from fixed-point data")
    sub.add_parser("localize", parents=[common], help="orbit decomposition of the localized class")

    lens = sub.add_parser("lens", parents=[common], help="lens spaces and rho-vectors")
    lens.add_argument("mode", choices=["rho", "compare", "search"])
    lens.add_argument("--lens", action="append", default=[], help="n:q1,q2,... (literal weights)")
    lens.add_argument("--n-max", type=int, default=7)
    lens.add_argument("--m", type=int, default=1, help="number of weights after the leading 1")

    ded = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(q, n)")
    ded.add_argument("q", type=int)
    ded.add_argument("n", type=int)

    st = sub.add_parser("selftest", parents=[common], help="quick calibration run")
    st.add_argument("--list", action="store_true", help="list bundled inputs")
    return parser


def run(argv: Optional[list[str]] = None) -> tuple[int, Optional[RunReport]]:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(["equisig"] + argv, _digest(json.dumps(argv).encode()))
    start = time.perf_counter()
    try:
        COMMANDS[args.command](args, report)
    except HypothesisViolation as exc:
        print(f"equisig: hypothesis violated: {exc}", file=sys.stderr)
        return 2, None
    except SchemaError as exc:
        print(f"equisig: invalid input at {exc}", file=sys.stderr)
        return 2, None
    except (UsageError, InvalidPrime, MissingFixedData, ValueError) as exc:
        print(f"equisig: {exc}", file=sys.stderr)
        return 2, None
    report.timing = time.perf_counter() - start
    for line in report.summary:
        print(line)
    if report.results.get("checks") and args.command != "selftest":
        for name, ok in report.results["checks"].items():
            print(f"[{'ok' if ok else 'FAILED'}] {name}")
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n")
    return (0 if report.verified else 1), report


def main(argv: Optional[list[str]] = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
