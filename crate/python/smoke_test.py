"""Smoke test for the hyperturan_py extension module."""

import hyperturan_py as ht

tri = ht.Hypergraph(3, 2, [[1, 2], [1, 3], [2, 3]])
assert len(tri) == 3 and tri.n == 3 and tri.r == 2
assert ht.Hypergraph.from_text(tri.to_text()) == tri

verdict = ht.check_property(tri, "cancellative", t=1)
assert not verdict["holds"]
assert verdict["certificate"]["B"] == [1, 2]
assert ht.check_property(tri, "cover-free", t=1)["holds"]

h, report = ht.build("union-free", 30, r=3, t=3, seed=1)
assert report["final_size"] == len(h)
assert ht.check_property(h, "union-free", t=3)["holds"]

s, _ = ht.build("sparse", 20, r=3, constraints=[(4, 2)], c=1.0, seed=3)
assert ht.check_property(s, "sparse", v=4, e=2)["holds"]

parts, crossing = ht.partite(tri)
assert len(parts) == 2 and len(crossing) == 2

assert ht.predict(3, 3)["lower_cancellative"]["exact"] == "5/4"

res = ht.search_max("cancellative", 5, 2, t=1)
assert res["max_size"] == 6 and res["optimal"]

dense = ht.Hypergraph(7, 2, [[a, b] for a in range(1, 8) for b in range(a + 1, 8)])
core = ht.peel(dense, 1, 2)
w = ht.witness(core, 1, 1)
assert w["kind"] == "cancellative"

fit = ht.fit("cancellative", 3, 3, [14, 18, 22, 26], reps=3, seed=2)
assert fit["predicted"]["exact"] == "5/4"

print("smoke test ok")
