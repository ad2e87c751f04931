"""Command-line front end.

Every command except ``gen`` reads one front as JSON from a file argument or
from stdin.  Exit codes: 0 success, 1 invalid input, 2 budget or size limit
exceeded, 3 the equivalence predicates disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import closedform, dga, front, ruling, skein
from .algebra import coeff_a, partition

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, with_input: bool = True):
    if with_input:
        p.add_argument("input", nargs="?", default="-", help="front JSON file, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=skein.DEFAULT_BUDGET, help="skein recursion node budget")
    p.add_argument("--p", type=int, default=1, dest="p", help="grading modulus")
    p.add_argument("--generalized", action="store_true", help="allow fixed strands in rulings")
    p.add_argument("--limit", type=int, default=None, help="size limit (rulings listed, free generators)")


def make_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="jetlink", description="Invariants of Legendrian links in the 1-jet space of the circle.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in [
        ("validate", "print the strand-count table"),
        ("invariants", "tb, rotation, writhe, cusps"),
        ("rulings", "list rulings and the ruling polynomial"),
        ("kauffman", "skein invariants D and F"),
        ("spec", "specialized invariant and the recovered ruling polynomial"),
        ("sharp", "tb sharpness verdict and certificate"),
        ("dga", "dump the DGA and check its structure"),
        ("equivalence", "cross-check sharpness, rulings and augmentations"),
    ]:
        _common(sub.add_parser(name, help=help_))
    a = sub.add_parser("augment", help="augmentations: construct from rulings, extract rulings, brute force")
    _common(a)
    mode = a.add_mutually_exclusive_group()
    mode.add_argument("--construct", action="store_true", help="one augmentation per generalized ruling (default)")
    mode.add_argument("--extract", metavar="FILE", help="read an augmentation and extract its ruling")
    mode.add_argument("--brute-force", action="store_true", dest="brute")
    g = sub.add_parser("gen", help="emit a front: A <parts>, basic <m>, unknot, random")
    _common(g, with_input=False)
    g.add_argument("kind", choices=["A", "basic", "unknot", "random"])
    g.add_argument("arg", nargs="?", default="", help="comma-separated parts, or m")
    g.add_argument("--neg", default="", help="parts of A_lambda with reversed orientation")
    g.add_argument("--max-events", type=int, default=8)
    return ap


# ---------------------------------------------------------------------------


def _read_json(path: str, stdin):
    try:
        if path == "-":
            return json.loads(stdin.read())
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from exc


def _load(args, stdin):
    obj = _read_json(args.input, stdin)
    try:
        d, o, mspec = front.load_front(obj)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed front JSON: {exc}") from exc
    return d, o, mspec


def _potential(d, mspec, p):
    seeds = mspec.get("seam_values") if mspec and int(mspec.get("p", 0)) == p else None
    if p == 1 and seeds is None:
        return ruling._default_potential(d, 1)
    return front.maslov(d, p, seeds)


def _parts(text: str) -> tuple:
    if not text:
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}") from exc


def _emit(out, args, data: dict, lines: Sequence[str]):
    if args.json:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def cmd_validate(args, d, o, mspec, out):
    counts = d.validate()
    comps = d.components()
    data = {"valid": True, "counts": counts, "components": len(comps)}
    lines = ["valid", "m  N(m)"] + [f"{m:<2} {n}" for m, n in enumerate(counts)] + [f"components: {len(comps)}"]
    _emit(out, args, data, lines)
    return EXIT_OK


def cmd_invariants(args, d, o, mspec, out):
    comps = d.components()
    rots = [front.rotation(d, o, c.index) for c in comps]
    data = {
        "tb": front.tb(d, o),
        "writhe": front.writhe(d, o),
        "cusps": front.cusp_count(d),
        "rotation": [str(r) for r in rots],
        "winding": front.windings(d, o),
    }
    lines = [
        f"tb: {data['tb']}",
        f"writhe: {data['writhe']}",
        f"cusps: {data['cusps']}",
        "rotation: " + " ".join(data["rotation"]),
        "winding: " + " ".join(map(str, data["winding"])),
    ]
    _emit(out, args, data, lines)
    return EXIT_OK


def cmd_rulings(args, d, o, mspec, out):
    mu = _potential(d, mspec, args.p)
    rs = ruling.enumerate_rulings(d, args.generalized, args.p, mu)
    poly = ruling.ruling_polynomial(d, args.p, mu, args.generalized)
    shown = rs if args.limit is None else rs[: args.limit]
    data = {"count": len(rs), "polynomial": poly.to_json(), "rulings": [r.to_json(d) for r in shown]}
    lines = [f"rulings: {len(rs)}"]
    for r in shown:
        js = r.to_json(d)
        lines.append(f"  seed {js['seed']} switches {js['switches']} j={js['j']}")
    lines.append(f"R = {poly}")
    _emit(out, args, data, lines)
    return EXIT_OK


def cmd_kauffman(args, d, o, mspec, out):
    D = skein.kauffman_D(skein.from_front(d), args.budget)
    F = skein.kauffman_F(d, o, args.budget)
    _emit(out, args, {"D": D.to_json(), "F": F.to_json()}, [f"D = {D}", f"F = {F}"])
    return EXIT_OK


def cmd_spec(args, d, o, mspec, out):
    F = skein.kauffman_F(d, o, args.budget)
    hat = closedform.psi(F)
    t = front.tb(d, o)
    rec = coeff_a(hat, -t)
    data = {"F_hat": hat.to_json(), "tb": t, "recovered": rec.to_json()}
    _emit(out, args, data, [f"F_hat = {hat}", f"tb = {t}", f"R1 = {rec}"])
    return EXIT_OK


def cmd_sharp(args, d, o, mspec, out):
    sharp, cert, t, bound = closedform.sharpness(d, o, args.budget)
    data = {"sharp": sharp, "tb": t, "bound": bound, "certificate": list(cert) if cert is not None else None}
    line = f"sharp: {'yes' if sharp else 'no'}  tb={t}  bound={bound}"
    if cert is not None:
        line += f"  certificate=({','.join(map(str, cert))})"
    _emit(out, args, data, [line])
    return EXIT_OK


def cmd_dga(args, d, o, mspec, out):
    g = dga.build(d, _potential(d, mspec, args.p))
    report = dga.check_structure(g)
    data = {"dga": g.to_json(), "structure": report}
    lines = [f"generators: {len(g.generators)}  p={g.p}"]
    for q in g.generators:
        lines.append(f"  |{q}| = {g.degree[q]}   d {q} = {dga.format_element(g.differential[q])}")
    lines.append("structure: d^2 = 0, deg d = -1")
    _emit(out, args, data, lines)
    return EXIT_OK


def cmd_augment(args, d, o, mspec, out, stdin=None):
    mu = _potential(d, mspec, args.p)
    g = dga.build(d, mu)
    if args.extract:
        eps = dga.augmentation_from_json(_read_json(args.extract, stdin))
        r = dga.gnr_from_augmentation(g, d, eps, args.p)
        js = r.to_json(d)
        _emit(out, args, {"ruling": js}, [f"ruling: seed {js['seed']} switches {js['switches']} j={js['j']}"])
        return EXIT_OK
    if args.brute:
        augs = dga.brute_force_augmentations(g, args.p, args.limit or dga.DEFAULT_LIMIT)
        data = {"count": len(augs), "augmentations": [dga.augmentation_to_json(e) for e in augs]}
        lines = [f"augmentations: {len(augs)}"]
        lines += ["  " + " ".join(f"{k}={v}" for k, v in dga.augmentation_to_json(e).items() if v) for e in augs]
        _emit(out, args, data, lines)
        return EXIT_OK
    rs = ruling.enumerate_rulings(d, True, args.p, mu)
    if args.limit is not None:
        rs = rs[: args.limit]
    augs = [dga.augmentation_from_gnr(g, d, r) for r in rs]
    data = {"count": len(augs), "augmentations": [dga.augmentation_to_json(e) for e in augs]}
    lines = [f"constructed: {len(augs)} (each verified)"]
    for r, e in zip(rs, augs):
        on = [k for k, v in dga.augmentation_to_json(e).items() if v]
        lines.append(f"  switches {[s + 1 for s in r.switches]}: " + " ".join(on))
    _emit(out, args, data, lines)
    return EXIT_OK


def equivalence_report(d, o=None, p: int = 1, mu=None, budget: int = skein.DEFAULT_BUDGET, limit: int = dga.DEFAULT_LIMIT) -> dict:
    """Evaluate sharpness, ruling existence and augmentation existence.

    Sharpness is a 1-graded statement; the ruling and augmentation predicates
    are computed mod ``p``.  Augmentation existence is decided by brute force
    when the free generators fit under ``limit``, otherwise by constructing one
    from a ruling (which cannot certify nonexistence).
    """
    if mu is None:
        mu = ruling._default_potential(d, p)
    sharp = closedform.sharpness(d, o, budget)[0]
    gnr1 = ruling.has_ruling(d, True, 1)
    gnr_p = gnr1 if p == 1 else ruling.has_ruling(d, True, p, mu)
    g = dga.build(d, mu)
    aug, method = None, "brute-force"
    try:
        aug = bool(dga.brute_force_augmentations(g, p, limit, stop_after=1))
    except dga.TooLarge:
        method = "construction"
        rs = ruling.enumerate_rulings(d, True, p, mu, limit=1)
        if rs:
            dga.augmentation_from_gnr(g, d, rs[0])
            aug = True
    checks = [sharp == gnr1]
    if aug is not None:
        checks.append(aug == gnr_p)
    return {
        "sharp": sharp,
        "gnr_1": gnr1,
        "gnr": gnr_p,
        "p": p,
        "augmentation": aug,
        "augmentation_method": method,
        "consistent": all(checks),
    }


def _yn(v):
    return "unknown" if v is None else ("yes" if v else "no")


def cmd_equivalence(args, d, o, mspec, out):
    rep = equivalence_report(d, o, args.p, _potential(d, mspec, args.p), args.budget, args.limit or dga.DEFAULT_LIMIT)
    lines = [
        f"sharp={_yn(rep['sharp'])}, GNR={_yn(rep['gnr'])}, augmentation={_yn(rep['augmentation'])}"
        f" ({rep['augmentation_method']}, p={rep['p']})",
        f"verdict: {'consistent' if rep['consistent'] else 'DISAGREE'}",
    ]
    _emit(out, args, rep, lines)
    return EXIT_OK if rep["consistent"] else EXIT_DISAGREE


def cmd_gen(args, out):
    if args.kind == "A":
        pos, neg = _parts(args.arg), _parts(args.neg)
        d, o = front.a_lambda_oriented(pos, neg)
    elif args.kind == "basic":
        try:
            m = int(args.arg)
        except ValueError as exc:
            raise UsageError("basic needs an integer m") from exc
        d = front.basic_front(m)
        o = None
    elif args.kind == "unknot":
        d, o = front.unknot(), None
    else:
        d, o = front.random_front(args.seed, args.max_events), None
    if o is None:
        o = front.default_orientation(d)
    out.write(json.dumps(d.to_json(orientation=o), sort_keys=True) + "\n")
    return EXIT_OK


_COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "rulings": cmd_rulings,
    "kauffman": cmd_kauffman,
    "spec": cmd_spec,
    "sharp": cmd_sharp,
    "dga": cmd_dga,
    "equivalence": cmd_equivalence,
}


def run(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        if args.p < 1:
            raise UsageError("--p must be positive")
        if args.command == "gen":
            return cmd_gen(args, out)
        d, o, mspec = _load(args, stdin)
        if args.command == "augment":
            return cmd_augment(args, d, o, mspec, out, stdin)
        return _COMMANDS[args.command](args, d, o, mspec, out)
    except (skein.BudgetExceeded, ruling.TooManyStrands, dga.TooLarge) as exc:
        err.write(f"limit exceeded: {exc}\n")
        return EXIT_LIMIT
    except (
        UsageError,
        front.FrontError,
        front.NoMaslovPotential,
        front.InconsistentSeed,
        dga.InvalidPotential,
        dga.AugmentationInvalid,
        dga.RulingMismatch,
        ruling.RulingInvalid,
        ValueError,
    ) as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
