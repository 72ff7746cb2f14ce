#!/usr/bin/env python3
"""Regenerates the JSON fixture corpus under fixtures/."""
import itertools
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def write(path, data):
    path = ROOT / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=1) + "\n")


def groupoid(ground, maps):
    return {"ground": ground, "generators": [{"map": m} for m in maps]}


def perm(ground, images):
    return dict(zip(ground, images))


def rank2_maps(ground, increasing):
    maps = []
    for dom in itertools.combinations(ground, 2):
        for im in itertools.permutations(ground, 2):
            if increasing and list(im) != sorted(im, key=ground.index):
                continue
            maps.append(dict(zip(dom, im)))
    return maps


G12, G123, G1234 = ["1", "2"], ["1", "2", "3"], ["1", "2", "3", "4"]

write("groupoids/noncm.json", groupoid(G123, [{"1": "2"}]))
write("groupoids/double_transposition.json", groupoid(G1234, [perm(G1234, "2143")]))
write("groupoids/cyclic3.json", groupoid(["a", "b", "c"], [{"a": "b", "b": "c", "c": "a"}]))
write("groupoids/sym2.json", groupoid(G12, [perm(G12, "21")]))
write("groupoids/sym3.json", groupoid(G123, [perm(G123, "213"), perm(G123, "231")]))
write("groupoids/alt3.json", groupoid(G123, [perm(G123, "231")]))
write("groupoids/qsym2.json", groupoid(G12, [{"1": "2"}]))
write("groupoids/qsym3.json", groupoid(G123, rank2_maps(G123, increasing=True)))
write("groupoids/staircase3.json", groupoid(G123, rank2_maps(G123, increasing=False)))
write("groupoids/sym2_plus_fixed.json", groupoid(G123, [perm(G123, "213")]))
write("groupoids/trivial3.json", groupoid(G123, []))


def layered(labels, relations, mult, equiv=False):
    return {
        "ground": labels,
        "relations": relations,
        "multiplicities": mult,
        "block_equivalence": equiv,
    }


def inf(labels):
    return {l: "inf" for l in labels}


for k in (1, 2, 3):
    labels = [f"I{i}" for i in range(k + 1)]
    rels = [{"name": f"u{i}", "arity": 1, "tuples": [[i]]} for i in range(k + 1)]
    write(f"structures/intervals_k{k}.json", layered(labels, rels, inf(labels)))

for count, name in ((2, "two"), (3, "three"), (4, "four")):
    labels = [f"K{i}" for i in range(count)]
    rels = [{"name": "edge", "arity": 2, "tuples": [[i, i] for i in range(count)]}]
    write(f"structures/{name}_cliques.json", layered(labels, rels, inf(labels)))

write(
    "structures/wheel_plus_independent.json",
    layered(
        ["center", "rim", "independent"],
        [{"name": "edge", "arity": 2, "tuples": [[0, 1], [1, 0]]}],
        {"center": 1, "rim": "inf", "independent": "inf"},
    ),
)
write(
    "structures/clique_plus_independent.json",
    layered(
        ["clique", "independent"],
        [{"name": "edge", "arity": 2, "tuples": [[0, 0]]}],
        inf(["clique", "independent"]),
    ),
)
write(
    "structures/negative.json",
    layered(
        ["E0", "E1"],
        [{"name": "H", "arity": 3, "tuples": [[0, 0, 0], [1, 1, 1]]}],
        inf(["E0", "E1"]),
    ),
)
write(
    "structures/four_blocks.json",
    layered(
        ["0", "1", "2", "3"],
        [
            {"name": "rho", "arity": 2, "tuples": [[0, 1], [0, 2], [1, 3]]},
            {"name": "U2", "arity": 1, "tuples": [[2]]},
            {"name": "U3", "arity": 1, "tuples": [[3]]},
        ],
        inf(["0", "1", "2", "3"]),
    ),
)

# Finite structures.
k5k5 = [[a, b] for block in (range(5), range(5, 10)) for a in block for b in block if a != b]
write("structures/k5_plus_k5.json", {"ground": 10, "relations": [{"name": "edge", "arity": 2, "tuples": k5k5}]})
write("structures/empty6.json", {"ground": 6, "relations": [{"name": "edge", "arity": 2, "tuples": []}]})
write(
    "structures/chain5.json",
    {"ground": 5, "relations": [{"name": "less", "arity": 2, "tuples": [[a, b] for a in range(5) for b in range(a + 1, 5)]}]},
)
star = [[0, i] for i in range(1, 5)] + [[i, 0] for i in range(1, 5)]
write("structures/star_plus_two.json", {"ground": 7, "relations": [{"name": "edge", "arity": 2, "tuples": star}]})

# Four-block blow-up generating series: the closed form and two alternate numerators.
write(
    "series/four_blocks.json",
    {
        "closed": {"num": [1, -1, 3, -3, 1], "den": [1, 1, 1, 1]},
        "q1": {"num": [1, 2, 6, 10, 14, 17, 18, 14, 10, 6, 1], "den": [1, 4, 5, 5]},
        "q2": {"num": [1, 2, 6, 10, 15, 18, 22, 18, 15, 10, 6, 0, 1, 0, 0, 0, 1], "den": [1, 5, 5, 5]},
    },
)
