import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from quiverfpd.homology import make_rep
from quiverfpd.quiver import FamilySpec, generate_family

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_loops = st.integers(min_value=0, max_value=3)


@st.composite
def families(draw, kinds=("A", "D", "E", "Qnm", "A3rev")):
    kind = draw(st.sampled_from(kinds))
    if kind == "A":
        n = draw(st.integers(1, 5))
        return FamilySpec.a(*draw(st.lists(small_loops, min_size=n, max_size=n)))
    if kind == "D":
        n = draw(st.integers(4, 6))
        return FamilySpec.d(*draw(st.lists(small_loops, min_size=n, max_size=n)))
    if kind == "E":
        n = draw(st.sampled_from((6, 7, 8)))
        return FamilySpec.e(*draw(st.lists(small_loops, min_size=n, max_size=n)))
    if kind == "Qnm":
        return FamilySpec.qnm(draw(small_loops), draw(small_loops))
    return FamilySpec.a3_reversed(draw(small_loops), draw(small_loops), draw(small_loops))


small_families = families(kinds=("A", "Qnm", "A3rev"))


@st.composite
def rad2_reps(draw, spec, max_part=2):
    """A module over kQ/(>=2): each M_v = top_v + bottom_v, arrows send tops to bottoms.

    Every radical-square-zero module arises this way up to isomorphism.
    """
    n = spec.vertex_count
    top = draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n))
    bottom = draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n))
    dims = [t + b for t, b in zip(top, bottom)]
    entry = st.integers(-2, 2)
    maps = {}
    for a in spec.arrows:
        s, t = a.source - 1, a.target - 1
        rows = [[0] * dims[s] for _ in range(dims[t])]
        for i in range(bottom[t]):
            for j in range(top[s]):
                rows[top[t] + i][j] = draw(entry)
        maps[a.id] = rows
    return make_rep(spec, dims, maps)


@st.composite
def spec_and_reps(draw, count=2, fams=small_families):
    spec = generate_family(draw(fams))
    return (spec, *[draw(rad2_reps(spec)) for _ in range(count)])
