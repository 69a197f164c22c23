"""Write the example corpus as JSON input files for the CLI."""
import argparse
from pathlib import Path

from partialhopf import corpus, io


def slug(name: str) -> str:
    return name.replace("/", "__").replace("[", "_").replace("]", "").replace(":", "-").replace(",", "-").replace("+", "u").replace("^", "dual_")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data")
    out = Path(ap.parse_args().out)
    for sub in ("wha", "groupoid", "action", "groupoid_action"):
        (out / sub).mkdir(parents=True, exist_ok=True)
    for name, G in corpus.groupoids().items():
        io.dump_json(io.groupoid_to_dict(G), out / "groupoid" / f"{slug(name)}.json")
    for name, H in corpus.weak_hopf_algebras(include_duals=True).items():
        io.dump_json(io.wha_to_dict(H), out / "wha" / f"{slug(name)}.json")
    for name, p in corpus.symmetric_actions().items():
        io.dump_json(io.action_to_dict(p), out / "action" / f"{slug(name)}.json")
    for name, pga in corpus.groupoid_actions().items():
        io.dump_json(io.groupoid_action_to_dict(pga), out / "groupoid_action" / f"{slug(name)}.json")
    print(f"wrote corpus to {out}/")


if __name__ == "__main__":
    main()
