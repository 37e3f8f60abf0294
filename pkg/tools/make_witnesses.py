"""Regenerate tests/fixtures/theorem_witnesses.json.

Scans the frozen corpus (smallest seeds first) for the three behaviors
the acceptance suite pins as regression fixtures:

  dominance      full-table bound strictly above the distributed bound
                 on the same landmark set
  reverse        distributed bound (k=4) strictly above a full-table
                 bound built from a different, single-landmark set
  inconsistency  an owner-boundary edge (u,v) and target t with
                 h(u,t) > w(u,v) + h(v,t)

Run from the repository root:

    python3 tools/make_witnesses.py
"""

import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import corpusdef  # noqa: E402

from polyroute import (  # noqa: E402
    build_alt_embedding,
    build_distributed_embedding,
    make_alp_evaluator,
    make_alt_evaluator,
)


def find_witnesses():
    out = {"dominance": None, "reverse": None, "inconsistency": None}
    for seed in corpusdef.CORPUS_SEEDS:
        g = corpusdef.corpus_graph(seed)
        L = corpusdef.corpus_landmarks(g, seed)
        alt_e = build_alt_embedding(g, L)
        alp_e = build_distributed_embedding(g, L)
        fa = make_alt_evaluator(alt_e)
        fp = make_alp_evaluator(alp_e)
        fa1 = make_alt_evaluator(
            build_alt_embedding(g, corpusdef.corpus_single_landmark(g, seed))
        )
        n = g.vertex_count
        for s in range(n):
            for t in range(n):
                if out["dominance"] and out["reverse"]:
                    break
                hv_alt = fa(s, t)[0]
                hv_alp = fp(s, t)[0]
                if out["dominance"] is None and hv_alt > hv_alp:
                    out["dominance"] = {
                        "seed": seed, "v": s, "t": t,
                        "alt": hv_alt, "alp": hv_alp,
                    }
                if out["reverse"] is None and hv_alp > fa1(s, t)[0]:
                    out["reverse"] = {
                        "seed": seed, "v": s, "t": t,
                        "alp": hv_alp, "alt_single": fa1(s, t)[0],
                    }
            else:
                continue
            break
        if out["inconsistency"] is None:
            found = corpusdef._find_inconsistency(g, alp_e.owner, fp, seed)
            if found:
                out["inconsistency"] = found
        if all(out.values()):
            return out
    missing = [k for k, v in out.items() if v is None]
    raise SystemExit(f"corpus scan exhausted without witnesses for {missing}")


def main():
    witnesses = find_witnesses()
    dest = ROOT / "tests" / "fixtures" / "theorem_witnesses.json"
    dest.parent.mkdir(parents=True, exist_ok=True)
    with open(dest, "w", encoding="ascii") as fh:
        json.dump(witnesses, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {dest}")
    for name, w in witnesses.items():
        print(f"  {name}: {w}")


if __name__ == "__main__":
    main()
