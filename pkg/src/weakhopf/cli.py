"""Command line front end.

Exit codes: 0 when every checked law holds, 1 on a law failure (the failing
label is printed), 2 when an input cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileio
from .exactlin import GF, QQ, DimensionError
from .generators import fixture, random_hl_module, random_hopf_module, twisted_module
from .hopfmod import (HopfModule, check_hopf_module, fundamental_theorem, regular_hopf_module,
                      strong_check)
from .modcat import (NotStrong, RightHLModule, certify_equivalence, check_right_module, default_samples,
                     free_hl_module, hl_module_on_h, induce)
from .report import LawFailure, Report
from .whq import check_axioms, identity_suite

EXIT_OK, EXIT_LAW, EXIT_PARSE = 0, 1, 2


class _Out:
    """Collects reports and prints them as text or one JSON document."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self.reports: list[dict] = []
        self.notes: list[str] = []

    def report(self, rep: Report):
        if self.fmt == "json":
            self.reports.append(rep.as_dict())
        else:
            print(rep.text(), file=self.stream)

    def note(self, line: str):
        if self.fmt == "json":
            self.notes.append(line)
        else:
            print(line, file=self.stream)

    def finish(self, code: int, failed: str | None = None) -> int:
        if failed is not None:
            self.note(f"first failure: ({failed})")
        if self.fmt == "json":
            doc = {"exit": code, "reports": self.reports, "notes": self.notes}
            if failed is not None:
                doc["failed"] = failed
            print(json.dumps(doc, indent=1), file=self.stream)
        else:
            print("PASS" if code == EXIT_OK else "FAIL", file=self.stream)
        return code


def _field(name):
    if name is None or name in ("Q", "QQ"):
        return None if name is None else QQ
    s = name[1:] if name[:1] in "Ff" else name
    try:
        return GF(int(s.lstrip("p")))
    except ValueError:
        raise fileio.FormatError(f"unknown field {name!r}") from None


def _load(args):
    d = fileio._parse(fileio._read(args.path))
    F = _field(args.field)
    if F is not None and isinstance(d, dict):
        d = dict(d, field=F.descriptor())
    return fileio.structure_from_dict(d)


def _axioms(H, out: _Out) -> Report:
    rep = check_axioms(H)
    out.report(rep)
    return rep


def cmd_validate(args, out: _Out) -> int:
    H = _load(args)
    rep = _axioms(H, out)
    if not rep.all_ok:
        return out.finish(EXIT_LAW, rep.first_failure().label)
    ids = identity_suite(H)
    out.report(ids)
    f = ids.first_failure()
    return out.finish(EXIT_LAW if f else EXIT_OK, f.label if f else None)


def _matrix_lines(name, mor):
    rows = mor.to_rows()
    F = mor.field
    width = max((len(F.format(v)) for r in rows for v in r), default=1)
    yield f"{name} ="
    for r in rows:
        yield "  [" + " ".join(F.format(v).rjust(width) for v in r) + "]"


def cmd_derive(args, out: _Out) -> int:
    H = _load(args)
    rep = _axioms(H, out)
    if not rep.all_ok:
        return out.finish(EXIT_LAW, rep.first_failure().label)
    P = H.projections
    eta_eps = H.unit @ H.counit
    for name, mor in (("Π^L", P.piL), ("Π^R", P.piR)):
        if mor == eta_eps:
            out.note(f"{name} = η∘ε")
        else:
            for line in _matrix_lines(name, mor):
                out.note(line)
    w = H.magma.associator_witness()
    out.note("H associative" if w is None else f"H nonassociative: witness {w}")
    try:
        for B in (H.left, H.right):
            out.report(B.report)
            out.note(f"dim H_{B.side} = {B.dim}")
    except LawFailure as e:
        return out.finish(EXIT_LAW, e.label)
    return out.finish(EXIT_OK)


def _load_modules(args, H):
    return [fileio.load_module(p, H) for p in (args.module or [])]


def _check_hopf(M: HopfModule, out: _Out):
    rep = check_hopf_module(M)
    if not rep.all_ok:
        out.report(rep)
        raise LawFailure(rep.first_failure().label, rep.first_failure().witness)


def cmd_fundamental(args, out: _Out) -> int:
    H = _load(args)
    rep = check_axioms(H)
    if not rep.all_ok:
        out.report(rep)
        return out.finish(EXIT_LAW, rep.first_failure().label)
    mods = _load_modules(args, H) or [regular_hopf_module(H)]
    try:
        for M in mods:
            if not isinstance(M, HopfModule):
                raise fileio.FormatError("fundamental needs Hopf module files")
            _check_hopf(M, out)
            iso = fundamental_theorem(M)
            out.report(Report(f"fundamental theorem, dim M = {M.dim}, "
                              f"dim M^coH = {M.coinvariants.dim}", iso.evidence))
    except LawFailure as e:
        return out.finish(EXIT_LAW, e.label)
    return out.finish(EXIT_OK)


def cmd_equivalence(args, out: _Out) -> int:
    H = _load(args)
    rep = check_axioms(H)
    if not rep.all_ok:
        out.report(rep)
        return out.finish(EXIT_LAW, rep.first_failure().label)
    try:
        given = _load_modules(args, H)
        if given:
            hl = [m for m in given if isinstance(m, RightHLModule)]
            hopf = [m for m in given if isinstance(m, HopfModule)]
            morphisms = []
        else:
            hl, hopf, morphisms = default_samples(H)
        if args.seed is not None:
            hl.append(random_hl_module(H, 2, args.seed))
            hopf.append(random_hopf_module(H, args.seed))
        for N in hl:
            if not check_right_module(N):
                raise LawFailure("hl-module-assoc", detail="sample is not a right H_L-module")
        for M in hopf:
            # strongness is what admits a sample, so it is checked first
            c1 = strong_check(M)
            if not c1.ok:
                raise NotStrong(c1.witness)
            _check_hopf(M, out)
        out.note(f"samples: {len(hl)} H_L-modules, {len(hopf)} Hopf modules, "
                 f"dim H_L = {H.left.dim}")
        cert = certify_equivalence(H, hl, hopf, morphisms)
    except LawFailure as e:
        return out.finish(EXIT_LAW, e.label)
    out.report(cert.report)
    return out.finish(EXIT_OK)


def cmd_gen(args, out: _Out) -> int:
    F = _field(args.field) or QQ
    try:
        H = fixture(args.name, F)
    except (KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    kind = args.module
    if kind is None:
        obj = H
    elif kind == "regular":
        obj = regular_hopf_module(H)
    elif kind == "random":
        obj = random_hopf_module(H, args.seed or 0)
    elif kind == "twisted":
        obj = twisted_module(H)
    elif kind == "hl-on-h":
        obj = hl_module_on_h(H)
    elif kind == "hl-random":
        obj = random_hl_module(H, 2, args.seed or 0)
    elif kind.startswith("free-"):
        obj = free_hl_module(H, int(kind[5:]))
    elif kind.startswith("induced-"):
        obj = induce(free_hl_module(H, int(kind[8:]))).module
    else:
        print(f"error: unknown module kind {kind!r}", file=sys.stderr)
        return EXIT_PARSE
    text = fileio.dumps(obj)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.stream.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weakhopf", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q or Fp (e.g. F7); reinterprets file scalars")
    common.add_argument("--report", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, help="seed for random module samples")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the axioms and derived identities")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)
    p = sub.add_parser("derive", parents=[common],
                       help="projections, base objects, Casimir and Frobenius verdicts")
    p.add_argument("path")
    p.set_defaults(func=cmd_derive)
    p = sub.add_parser("fundamental", parents=[common],
                       help="certify M ~ M^coH x H (regular module by default)")
    p.add_argument("path")
    p.add_argument("--module", action="append", help="Hopf module file (repeatable)")
    p.set_defaults(func=cmd_fundamental)
    p = sub.add_parser("equivalence", parents=[common],
                       help="certify unit, counit and triangle identities on samples")
    p.add_argument("path")
    p.add_argument("--module", action="append",
                   help="H_L-module or Hopf module file (repeatable); default samples otherwise")
    p.set_defaults(func=cmd_equivalence)
    p = sub.add_parser("gen", parents=[common], help="emit a structure or module file")
    p.add_argument("name", help="C<n>, S<n>, C2xC2, chein-<G>, discrete-<k>, pair-<k>, A*B")
    p.add_argument("--module", help="regular, random, twisted, hl-on-h, hl-random, free-<k>, induced-<k>")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.report)
    try:
        return args.func(args, out)
    except (fileio.FormatError, DimensionError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
