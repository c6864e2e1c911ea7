import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import antithetical_instances, close, exhaustive_opt, instances, make
from wsps import (
    EmptyInstance,
    key_sequence,
    normalize_instance,
    solve_antithetical,
    solve_keyseq,
    verify_key_conditions,
)


def subsequences(n):
    for k in range(1, n + 1):
        yield from itertools.combinations(range(n), k)


class TestKeySequence:
    def test_example(self):
        key = key_sequence(make([1, 2, 3], [5, 1, 4]))
        assert key.indices == (0, 2)
        assert key.upper_envelope.breakpoints == (1.0, 3.0)
        assert key.ustar == 13.0

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_equal_jobs(self, n):
        key = key_sequence(make([2.0] * n, [3.0] * n))
        assert key.indices == (n - 1,)
        assert key.ustar == 6.0

    def test_strictly_decreasing(self):
        key = key_sequence(make([1, 2, 3], [3, 2, 1]))
        assert key.indices == (0, 1, 2)
        assert key.ustar == 6.0

    def test_equal_weights_keep_only_the_longest(self):
        assert key_sequence(make([1, 2, 3], [4, 4, 4])).indices == (2,)

    def test_tie_on_length_picks_heaviest(self):
        inst = make([2, 2, 1], [5, 1, 3])
        key = key_sequence(inst)
        assert [inst[i].id for i in key.indices] == ["1"]

    def test_empty(self):
        with pytest.raises(EmptyInstance):
            key_sequence(normalize_instance([]))

    @settings(max_examples=300)
    @given(instances(max_size=9))
    def test_greedy_satisfies_conditions_and_claim(self, inst):
        key = key_sequence(inst)
        assert verify_key_conditions(inst, key.indices)
        ps = [inst[i].p for i in key.indices]
        assert all(a < b for a, b in zip(ps, ps[1:]))
        for k in key.indices:
            assert inst[k].w == max(j.w for j in inst.jobs[k:])

    @settings(max_examples=100)
    @given(instances(max_size=9, ws=st.integers(0, 4).map(float)))
    def test_unique(self, inst):
        found = [s for s in subsequences(len(inst)) if verify_key_conditions(inst, s)]
        assert found == [key_sequence(inst).indices]


class TestVerifyConditions:
    inst = make([1, 2, 3], [5, 1, 4])

    def test_accepts_key(self):
        assert verify_key_conditions(self.inst, (0, 2))

    def test_block_domination_fails(self):
        assert not verify_key_conditions(self.inst, (2,))

    @pytest.mark.parametrize("indices", [(0,), (0, 1), (), (2, 0), (0, 0, 2)])
    def test_malformed(self, indices):
        assert not verify_key_conditions(self.inst, indices)

    def test_non_strict_weights(self):
        assert not verify_key_conditions(make([1, 2], [3, 3]), (0, 1))


class TestSolve:
    def test_example(self):
        s, cert = solve_keyseq(make([1, 2, 3], [5, 1, 4]))
        assert s.order == ("1", "3")
        assert [(e.start, e.completion) for e in s] == [(0.0, 0.5), (0.5, 1.75)]
        assert s.objective == 7.5 and cert == 13.0
        assert 2 * s.objective >= cert

    @pytest.mark.parametrize("n", [1, 3, 8])
    def test_equal_jobs(self, n):
        s, cert = solve_keyseq(make([4.0] * n, [1.5] * n))
        assert s.objective == 3.0 and cert == 6.0

    def test_empty(self):
        with pytest.raises(EmptyInstance):
            solve_keyseq(normalize_instance([]))

    @settings(max_examples=300)
    @given(instances(max_size=10, ps=st.floats(0.01, 1e4), ws=st.floats(0, 1e4)))
    def test_lower_bound_per_job(self, inst):
        s, cert = solve_keyseq(inst)
        prev_p = 0.0
        for e in s:
            assert e.overlap >= (e.job.p - prev_p) / 2 * (1 - 1e-12)
            prev_p = e.job.p
        assert 2 * s.objective >= cert * (1 - 1e-9)

    @settings(max_examples=150, deadline=None)
    @given(instances(max_size=6))
    def test_bounds_against_exhaustive_optimum(self, inst):
        s, cert = solve_keyseq(inst)
        opt = float(exhaustive_opt(inst))
        assert opt <= cert + 1e-9 * cert
        assert s.objective >= 0.5 * opt - 1e-9
        assert s.objective <= opt + 1e-9 * opt

    @settings(max_examples=100)
    @given(antithetical_instances(max_size=8))
    def test_coincides_with_spt_for_strictly_decreasing_weights(self, inst):
        ws = [j.w for j in inst]
        if any(a <= b for a, b in zip(ws, ws[1:])):
            return
        s, _ = solve_keyseq(inst)
        assert len(s) == len(inst)
        assert s.objective == solve_antithetical(inst).objective


@pytest.mark.parametrize("n", range(1, 16))
def test_tightness_family(n):
    inst = make([1.0] * n, [1.0] * n)
    key, _ = solve_keyseq(inst)
    full = solve_antithetical(inst).objective
    assert key.objective == 0.5
    assert full == 1 - 2.0**-n
    assert close(key.objective / full, 0.5 / (1 - 2.0**-n))


@pytest.mark.parametrize("eps", [0.1, 0.01, 0.001])
def test_tightness_threshold(eps):
    n = math.ceil(math.log2(1 / eps))
    inst = make([1.0] * n, [1.0] * n)
    assert solve_keyseq(inst)[0].objective / solve_antithetical(inst).objective < 0.5 + eps
