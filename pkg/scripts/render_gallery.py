#!/usr/bin/env python3
"""Render a small gallery: tight families before/after untangling, plus a few
random almost-planar instances."""

import argparse
from pathlib import Path

import untangling as ut


def dump(path: Path, d, moved=()):
    path.write_text(ut.render_svg(d, moved=moved), encoding="utf-8")
    print(path)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("gallery"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for n in (6, 10, 14):
        d = ut.gen_fig5(n)
        u = ut.min_untangle(d)
        rep = ut.verify_untangling(d, u)
        dump(args.out / f"fig5-n{n}-before.svg", d)
        dump(args.out / f"fig5-n{n}-after.svg", rep.result, moved=u.moved_set())

    for n in (6, 11):
        dump(args.out / f"tight-general-n{n}.svg", ut.gen_tight_general(n))

    for seed in (1, 2, 3):
        d = ut.gen_random(12, seed, "almost-planar")
        u = ut.min_untangle(d)
        rep = ut.verify_untangling(d, u)
        dump(args.out / f"random-s{seed}-before.svg", d)
        dump(args.out / f"random-s{seed}-after.svg", rep.result, moved=u.moved_set())


if __name__ == "__main__":
    main()
