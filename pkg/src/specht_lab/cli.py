"""Command-line front end: JSON on stdout, logs on stderr.

Exit codes: 0 success, 1 a verification disagreed with the expected tables,
2 usage or input error (body ``{"error": ...}``).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from . import expected, resolution
from .braids import SUBGROUPS, BraidWord, NotPure, doubled_windings, rho, specht_membership
from .cohomology import QuotientSpec, cohomology_group, splitting_check
from .linalg import Lattice, lattice_index
from .modules import (MODULE_IDS, UnsupportedAtN3, classify_submodule, image_lattice, module, pairs,
                      s1_lattice, s2_lattice)
from .symmetric import Ring
from .verify import SCOPES, run_suite

log = logging.getLogger("specht_lab")

MAP_CHOICES = "pi:m, f0, f1, f2, f01, f02, f12"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _pair_key(i: int, j: int) -> str:
    return f"{i}{j}" if i < 10 and j < 10 else f"{i},{j}"


def _omega(n: int, coords: Sequence[int]) -> dict:
    return {_pair_key(i, j): c for (i, j), c in zip(pairs(n), coords)}


def _parse_braid(n: int, text: str) -> BraidWord:
    try:
        return BraidWord.parse(n, text)
    except ValueError as exc:
        raise UsageError(f"bad braid word {text!r}: {exc}") from None


def _parse_ring(text: str) -> Ring:
    try:
        return Ring.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_map(text: str, ring: Optional[Ring]) -> tuple:
    if text.startswith("pi:"):
        try:
            m = int(text[3:])
        except ValueError:
            raise UsageError(f"bad map id {text!r}; use {MAP_CHOICES}") from None
        if m < 2:
            raise UsageError("pi:m needs m >= 2")
        if ring is not None and ring != Ring(m):
            raise UsageError(f"map {text} implies ring Z/{m}, got {ring}")
        return "pi_m", Ring(m)
    if text not in ("f0", "f1", "f2", "f01", "f02", "f12"):
        raise UsageError(f"bad map id {text!r}; use {MAP_CHOICES}")
    return text, ring or Ring()


def _check_n(n: int, low: int = 3):
    if n < low:
        raise UsageError(f"--n must be at least {low}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_winding(args) -> tuple:
    _check_n(args.n, 2)
    w = _parse_braid(args.n, args.braid)
    p = rho(w)
    if not p.is_identity():
        return {"pure": False, "permutation": list(p.images)}, 0
    return {"pure": True, "omega": _omega(args.n, [x // 2 for x in doubled_windings(w)])}, 0


def cmd_membership(args) -> tuple:
    _check_n(args.n)
    if args.subgroup not in SUBGROUPS:
        raise UsageError(f"unknown subgroup {args.subgroup}; use {', '.join(SUBGROUPS)}")
    w = _parse_braid(args.n, args.braid)
    try:
        member = specht_membership(w, args.subgroup)
    except NotPure:
        raise UsageError("braid is not pure") from None
    return {"subgroup": args.subgroup, "member": member,
            "omega": _omega(args.n, [x // 2 for x in doubled_windings(w)])}, 0


def cmd_classify(args) -> tuple:
    _check_n(args.n)
    vecs: List[List[int]] = []
    d = len(pairs(args.n))
    for chunk in filter(None, (args.vectors or "").split(";")):
        try:
            v = [int(t) for t in chunk.split()]
        except ValueError:
            raise UsageError(f"bad winding vector {chunk!r}") from None
        if len(v) != d:
            raise UsageError(f"winding vectors need {d} entries for n={args.n}")
        vecs.append(v)
    for chunk in filter(None, (args.braids or "").split(";")):
        w = _parse_braid(args.n, chunk)
        if not rho(w).is_identity():
            raise UsageError("braid is not pure")
        vecs.append([x // 2 for x in doubled_windings(w)])
    if not vecs:
        raise UsageError("give --vectors or --braids")
    return {"n": args.n, "label": classify_submodule(vecs, args.n)}, 0


def cmd_cohomology(args) -> tuple:
    _check_n(args.n)
    if args.module not in MODULE_IDS:
        raise UsageError(f"unknown module {args.module}; use {', '.join(MODULE_IDS)}")
    if args.degree not in (0, 1, 2):
        raise UsageError("--degree must be 0, 1 or 2")
    ring = _parse_ring(args.ring)
    H = cohomology_group(args.degree, module(args.module, args.n, ring))
    doc = H.to_json()
    if not args.generators:
        doc["generators"] = len(H.generators)
    return doc, 0


def cmd_splitting(args) -> tuple:
    _check_n(args.n, 4)
    ring = _parse_ring(args.ring) if args.ring else None
    map_id, ring = _parse_map(args.map, ring)
    q = QuotientSpec(args.n, ring, map_id)
    res = splitting_check(q)
    doc = {
        "n": args.n, "map": args.map, "ring": ring.to_json(),
        "splits": res["splits"],
        "witness": res["witness"].to_json() if res["witness"] is not None else None,
        "certificate": res["certificate"],
        "section_verified": res.get("verified"),
        "expected_splits": expected.splits(args.n, ring, map_id),
    }
    return doc, 0


def _sum_lattice(idx: tuple, n: int) -> Lattice:
    parts = {0: Lattice.full(1), 1: s1_lattice(n), 2: s2_lattice(n)}
    vecs, offset = [], 0
    total = sum(parts[i].ambient_rank for i in idx)
    for i in idx:
        lat = parts[i]
        for v in lat.vectors():
            vecs.append({offset + k: x for k, x in v.items()})
        offset += lat.ambient_rank
    return Lattice(total, vecs)


def cmd_image_index(args) -> tuple:
    _check_n(args.n, 4)
    if args.map not in ("f0", "f1", "f2", "f01", "f02", "f12"):
        raise UsageError("image-index takes f0, f1, f2, f01, f02 or f12")
    idx = tuple(int(ch) for ch in args.map[1:])
    got = lattice_index(image_lattice(idx, args.n), _sum_lattice(idx, args.n))
    doc = {"n": args.n, "map": args.map, "index": got}
    if idx == (1,):
        doc["formula"] = expected.f1_index(args.n)
    elif idx == (2,) and args.n >= 5:
        doc["formula"] = expected.f2_index(args.n)
    return doc, 0


def cmd_verify(args) -> tuple:
    if args.scope not in SCOPES:
        raise UsageError(f"unknown scope {args.scope!r}; use {', '.join(SCOPES)}")
    n_max = args.n_max if args.n_max is not None else (6 if args.scope == "paper-full" else 5)
    if args.scope == "paper-full" and n_max > resolution.MAX_N:
        raise UsageError(f"paper-full needs --n-max <= {resolution.MAX_N}")
    if n_max < 3:
        raise UsageError("--n-max must be at least 3")
    report = run_suite(args.scope, n_max, seed=args.seed, progress=lambda s: log.info("verify %s", s))
    return report.to_json(), 0 if report.ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="specht-lab", description="Specht subgroups of braid groups: exact verifications.")
    p.add_argument("--cache", help="kernel cache directory (default $SPECHT_LAB_CACHE or .specht-cache)")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("winding", help="winding numbers of a braid word")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--braid", required=True, help='signed generator indices, e.g. "1 -2 1"')
    s.set_defaults(func=cmd_winding)

    s = sub.add_parser("membership", help="membership of a pure braid in a Specht subgroup")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--subgroup", required=True, help=", ".join(SUBGROUPS))
    s.add_argument("--braid", required=True)
    s.set_defaults(func=cmd_membership)

    s = sub.add_parser("classify", help="Specht class of the submodule generated by windings")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--vectors", help='winding vectors separated by ";", entries in pair order')
    s.add_argument("--braids", help='pure braid words separated by ";"')
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("cohomology", help="H^k(S_n; M)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--module", required=True)
    s.add_argument("--ring", default="Z", help="Z or Zmod:m")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--generators", action="store_true", help="include generator cochains")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("splitting", help="does B_n/ker -> S_n split")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--map", required=True, help=MAP_CHOICES)
    s.add_argument("--ring", help="Z or Zmod:m (implied by pi:m)")
    s.set_defaults(func=cmd_splitting)

    s = sub.add_parser("image-index", help="index of an f-map image in its Specht target")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--map", required=True)
    s.set_defaults(func=cmd_image_index)

    s = sub.add_parser("verify", help="run the replication suite")
    s.add_argument("--scope", default="paper-small", help=", ".join(SCOPES))
    s.add_argument("--n-max", type=int, dest="n_max")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                            format="%(levelname)s %(message)s")
        if args.cache:
            resolution.set_cache_dir(args.cache)
        doc, code = args.func(args)
    except UsageError as exc:
        doc, code = {"error": str(exc)}, 2
    except (ValueError, IndexError, UnsupportedAtN3, resolution.SizeLimit) as exc:
        doc, code = {"error": str(exc)}, 2
    json.dump(doc, out, sort_keys=False)
    out.write("\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
