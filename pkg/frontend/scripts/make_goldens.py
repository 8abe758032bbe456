"""Regenerate the scripted session corpus for the UI/CLI parity tests.

For each session: the initial exchange matrix, the click sequence, and the
canonical JSON of the b-matrix and g-matrix after every prefix, computed by
the command-line side's library."""

import json
import pathlib
import sys

from clusterforge.cli import api_cluster_step
from clusterforge.codec import canon_json

SESSIONS = [
    {"name": "a2-pentagon", "b": [[0, -1], [1, 0]], "clicks": [1, 2, 1, 2, 1]},
    {"name": "a2-short", "b": [[0, -1], [1, 0]], "clicks": [2, 1]},
    {"name": "a3-walk", "b": [[0, -1, 0], [1, 0, -1], [0, 1, 0]], "clicks": [2, 1, 3, 2]},
    {"name": "a3-spin", "b": [[0, -1, 0], [1, 0, -1], [0, 1, 0]], "clicks": [1, 2, 3, 1, 2]},
    {"name": "k2-alternate", "b": [[0, -2], [2, 0]], "clicks": [1, 2, 1, 2]},
    {"name": "k3-deep", "b": [[0, -3], [3, 0]], "clicks": [2, 1, 2]},
    {"name": "cycle3", "b": [[0, -1, 1], [1, 0, -1], [-1, 1, 0]], "clicks": [1, 3, 2]},
    {"name": "d4-star", "b": [[0, 0, 0, -1], [0, 0, 0, -1], [0, 0, 0, -1], [1, 1, 1, 0]],
     "clicks": [4, 1, 4, 2]},
    {"name": "markov-lite", "b": [[0, -2, 2], [2, 0, -2], [-2, 2, 0]], "clicks": [1, 2]},
    {"name": "a4-snake", "b": [[0, -1, 0, 0], [1, 0, -1, 0], [0, 1, 0, -1], [0, 0, 1, 0]],
     "clicks": [2, 4, 1, 3]},
]


def main(out_path: str) -> None:
    corpus = []
    for spec in SESSIONS:
        b0 = [[str(x) for x in row] for row in spec["b"]]
        entry = {
            "name": spec["name"],
            "initial_b_matrix": b0,
            "clicks": spec["clicks"],
            "b_matrices": [],
            "g_matrices": [],
        }
        history = []
        for prefix_len in range(len(spec["clicks"]) + 1):
            history = spec["clicks"][:prefix_len]
            res = api_cluster_step({"b_matrix": b0, "history": history, "k": None})
            entry["b_matrices"].append(canon_json(res["b_matrix"]))
            entry["g_matrices"].append(canon_json(res["g_matrix"]))
        corpus.append(entry)
    pathlib.Path(out_path).write_text(json.dumps(corpus, indent=1) + "\n")
    print(f"wrote {len(corpus)} sessions to {out_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         str(pathlib.Path(__file__).parent.parent / "golden" / "sessions.json"))
