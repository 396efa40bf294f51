"""Acceptance suite: one test per criterion, one PASS/FAIL line per criterion."""
from __future__ import annotations

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from corpus import build_corpus

from altcodes.alternative import Decomposition, check_alternative, check_strong, check_unambiguous
from altcodes.bench import bench_fic, median_candidates_by_n
from altcodes.cli import EXIT_BUDGET, main
from altcodes.codes import ambiguity_witness, is_code, is_prefix_code, is_suffix_code, sardinas_patterson
from altcodes.fic import AltVerdictLabel, Route, decide_alt_induced, enumerate_decompositions, enumerate_strong_decompositions
from altcodes.generate import maximal_prefix_code, random_prefix_code
from altcodes.language import Language, kraft_sum, product, reverse
from altcodes.oracle import OracleBudget, brute_force_decompositions

TRIALS = 1000


def L(*ws, alphabet=None):
    return Language(ws, alphabet=alphabet)


@contextmanager
def criterion(label: str):
    start = time.perf_counter()
    detail: dict = {}
    try:
        yield detail
    except BaseException as exc:
        line = f"FAIL  {label}  ({time.perf_counter() - start:.2f}s) {type(exc).__name__}: {exc}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        raise
    extra = " ".join(f"{k}={v}" for k, v in detail.items())
    line = f"PASS  {label}  ({time.perf_counter() - start:.2f}s) {extra}".rstrip()
    print(line)
    ACCEPTANCE_LINES.append(line)


Z1 = L("aaa", "aab", "baa", "bbbbbbbbb")
X2 = L("ab", "abbb", "bba")
Y2 = L("aa", "ab", "baa", "bab")


def test_1_fic_exhausted_trace():
    with criterion("1 FIC exhausted fixture") as d:
        start = time.perf_counter()
        rep = decide_alt_induced(Z1)
        elapsed = time.perf_counter() - start
        assert rep.verdict is AltVerdictLabel.NOT_ALT_INDUCED
        assert rep.route is Route.FIC_EXHAUSTED
        steps = [(s.u, s.s) for s in rep.trace.steps]
        assert steps == [("a", L("aa", "ab")), ("aa", L("a", "b"))]
        assert elapsed < 1.0
        d["trace"] = [(u, str(s)) for u, s in steps]


def test_2_fic_found_pair():
    with criterion("2 FIC found fixture") as d:
        z = product(X2, Y2)
        assert len(z) == 12
        start = time.perf_counter()
        rep = decide_alt_induced(z)
        elapsed = time.perf_counter() - start
        assert rep.verdict is AltVerdictLabel.ALT_INDUCED and rep.route is Route.FIC_FOUND
        dec = rep.decomposition
        assert dec.product == z and len(dec.x) * len(dec.y) == 12
        assert dec == Decomposition(X2, Y2)
        assert elapsed < 5.0
        d["pair"] = str(dec)


def test_3_gcd_reject():
    with criterion("3 gcd obstruction fixture") as d:
        z = L("abc", "acb", "bac", "bca", "bbac", "cab", "cba", "caab")
        start = time.perf_counter()
        rep = decide_alt_induced(z)
        assert time.perf_counter() - start < 1.0
        assert rep.verdict is AltVerdictLabel.NOT_ALT_INDUCED and rep.route is Route.GCD_REJECT
        assert rep.gcd.gcd == 1 and sorted(rep.gcd.block_sizes.values()) == [2, 3, 3]
        d["sizes"] = rep.gcd.block_sizes


def test_4_non_code_witness(tmp_path, capsys):
    with criterion("4 non-code witness") as d:
        z = L("aaaa", "aaaab", "baaaa", "baaaab")
        f = tmp_path / "r.txt"
        f.write_text("\n".join(z) + "\n")
        start = time.perf_counter()
        rc = main(["check", "code", str(f)])
        out = capsys.readouterr().out
        assert rc == 0 and out.startswith("NotCode")
        assert not sardinas_patterson(z).is_code
        w = ambiguity_witness(z)
        assert time.perf_counter() - start < 1.0
        assert w.validate(z) and w.factorization_a != w.factorization_b and len(w.word) <= 10
        d["witness"] = str(w)


def test_5_two_word_code():
    with criterion("5 derived two-word fixture") as d:
        z = L("abb", "abbab")
        assert decide_alt_induced(z).verdict is AltVerdictLabel.ALT_INDUCED
        decs = enumerate_decompositions(z)
        strong = enumerate_strong_decompositions(z)
        oracle = brute_force_decompositions(z)
        assert len(decs) == 3 and list(oracle.decompositions) == decs
        assert strong == [Decomposition(L("a"), L("bb", "bbab"))]
        assert [x for x in oracle.decompositions if check_strong(x.x, x.y).is_strong] == strong
        d["count"] = len(decs)


def test_6_oracle_equivalence():
    with criterion("6 oracle equivalence corpus") as d:
        start = time.perf_counter()
        corpus = build_corpus()
        assert len(corpus) >= 500
        assert all(len(z) <= 8 and z.max_length() <= 5 and len(z.alphabet) in (2, 3) for z in corpus)
        budget = OracleBudget(max_suffixes=64)
        routes: dict[str, int] = {}
        for z in corpus:
            rep = decide_alt_induced(z)
            oracle = brute_force_decompositions(z, budget)
            assert oracle.is_code
            assert rep.is_alt_induced == bool(oracle.decompositions), str(z)
            assert enumerate_decompositions(z) == list(oracle.decompositions), str(z)
            routes[rep.route.value] = routes.get(rep.route.value, 0) + 1
        assert time.perf_counter() - start < 300
        non_standard = sum(routes.get(r, 0) for r in ("Length1Reject", "OneLetterAlphabet",
                                                       "CommonFirstLetter", "CommonLastLetter"))
        assert non_standard > 0
        d["codes"] = len(corpus)
        d["routes"] = routes


# random material for the property suites

def _rand_set(rng, alphabet, max_size=4, max_len=4):
    size = rng.randint(1, max_size)
    words = {"".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_len))) for _ in range(size)}
    return Language(words, alphabet=alphabet)


def _rand_factor(rng, k):
    """A random set, a prefix code or a suffix code, so both verdicts show up."""
    alphabet = "abc"[:k]
    roll = rng.random()
    if roll < 0.4:
        return _rand_set(rng, alphabet)
    code = random_prefix_code(rng, k, rng.randint(1, 4), 3)
    return reverse(code) if roll < 0.7 else code


def _trials(seed):
    rng = random.Random(seed)
    for _ in range(TRIALS):
        k = rng.choice((2, 3))
        yield rng, k


def test_7a_unambiguity_criteria():
    with criterion("7a unambiguity criteria agree") as d:
        count = agree = positive = 0
        for rng, k in _trials(101):
            x, y = _rand_factor(rng, k), _rand_factor(rng, k)
            v = check_unambiguous(x, y)
            count += 1
            agree += v.unambiguous == (v.overlap_count == 0) == (len(product(x, y)) == len(x) * len(y))
            positive += v.unambiguous
        assert count == TRIALS and agree == TRIALS
        assert 0 < positive < TRIALS
        d["unambiguous"] = positive


def test_7b_strong_definition_vs_characterization():
    with criterion("7b strong definition = characterization") as d:
        count = agree = positive = 0
        for rng, k in _trials(202):
            x, y = _rand_factor(rng, k), _rand_factor(rng, k)
            v = check_strong(x, y)
            by_char = is_prefix_code(x) and is_suffix_code(y) and is_code(product(x, y))
            by_def = (v.alternative.is_alternative and not v.condition1_violations.words
                      and not v.condition2_violations.words)
            count += 1
            agree += v.is_strong == by_char == by_def
            positive += v.is_strong
        assert count == TRIALS and agree == TRIALS
        assert 0 < positive < TRIALS
        d["strong"] = positive


_CLASSES = {
    "prefix": (is_prefix_code,),
    "suffix": (is_suffix_code,),
    "bifix": (is_prefix_code, is_suffix_code),
}


def _in_class(cls, x):
    return all(test(x) for test in _CLASSES[cls])


def _class_member(rng, k, cls):
    code = random_prefix_code(rng, k, rng.randint(1, 4), 3)
    if cls == "suffix":
        return reverse(code)
    if cls == "bifix":
        return Language(_uniform(rng, k), alphabet="abc"[:k])
    return code


def _uniform(rng, k):
    """A random subset of Aⁿ: always a bifix code."""
    n = rng.randint(1, 3)
    all_words = [""]
    for _ in range(n):
        all_words = [w + c for w in all_words for c in "abc"[:k]]
    return rng.sample(all_words, rng.randint(1, min(4, len(all_words))))


def test_7c_class_products():
    with criterion("7c class-preserving alt-induced products") as d:
        count = forward = backward = converse_hits = 0
        maximal_checked = 0
        for rng, k in _trials(303):
            cls = ("prefix", "suffix", "bifix")[count % 3]
            count += 1
            x, y = _class_member(rng, k, cls), _class_member(rng, k, cls)
            xy, yx = product(x, y), product(y, x)
            ok = (check_alternative(x, y).is_alternative and check_alternative(y, x).is_alternative
                  and _in_class(cls, xy) and _in_class(cls, yx))
            forward += ok
            # converse on unrestricted factors
            u, v = _rand_factor(rng, k), _rand_factor(rng, k)
            uv, vu = product(u, v), product(v, u)
            if (_in_class(cls, uv) and _in_class(cls, vu)
                    and check_alternative(u, v).is_alternative and check_alternative(v, u).is_alternative):
                converse_hits += 1
                backward += _in_class(cls, u) and _in_class(cls, v)
            else:
                backward += 1
            # maximal variant via exact Kraft sums
            if cls != "bifix":
                mx = maximal_prefix_code(rng, k, 1 + (k - 1) * rng.randint(1, 3), 4)
                my = maximal_prefix_code(rng, k, 1 + (k - 1) * rng.randint(1, 3), 4)
                if cls == "suffix":
                    mx, my = reverse(mx), reverse(my)
                assert kraft_sum(product(mx, my)) == 1 == kraft_sum(product(my, mx))
                assert _in_class(cls, product(mx, my)) and _in_class(cls, product(my, mx))
                maximal_checked += 1
        assert count == TRIALS and forward == TRIALS and backward == TRIALS
        assert converse_hits > 0
        d["converse_hits"] = converse_hits
        d["maximal"] = maximal_checked


def test_7d_strong_prefix_characterization():
    with criterion("7d strong prefix alt-induced = X prefix, Y bifix") as d:
        count = agree = positive = 0
        for rng, k in _trials(404):
            alphabet = "abc"[:k]
            x = _rand_factor(rng, k)
            y = _rand_factor(rng, k) if rng.random() < 0.5 else Language(_uniform(rng, k), alphabet=alphabet)
            lhs = check_strong(x, y).is_strong and is_prefix_code(product(x, y))
            rhs = is_prefix_code(x) and is_prefix_code(y) and is_suffix_code(y)
            count += 1
            agree += lhs == rhs
            positive += lhs
            # maximal variant: X maximal prefix, Y = Aⁿ (maximal bifix)
            mx = maximal_prefix_code(rng, k, 1 + (k - 1) * rng.randint(1, 3), 4)
            n = rng.randint(1, 2)
            my = Language(_uniform_full(alphabet, n), alphabet=alphabet)
            mz = product(mx, my)
            assert check_strong(mx, my).is_strong and is_prefix_code(mz) and kraft_sum(mz) == 1
        assert count == TRIALS and agree == TRIALS
        assert 0 < positive < TRIALS
        d["positive"] = positive


def _uniform_full(alphabet, n):
    words = [""]
    for _ in range(n):
        words = [w + c for w in words for c in alphabet]
    return words


def test_7e_reversal_duality():
    with criterion("7e reversal duality") as d:
        count = agree = 0
        for rng, k in _trials(505):
            x, y = _rand_factor(rng, k), _rand_factor(rng, k)
            a = check_alternative(x, y).is_alternative
            b = check_alternative(reverse(y), reverse(x)).is_alternative
            s1 = check_strong(x, y).is_strong
            s2 = (is_suffix_code(reverse(x)) and is_prefix_code(reverse(y))
                  and is_code(product(reverse(y), reverse(x))))
            z = _rand_set(rng, "abc"[:k], max_size=5)
            ok = a == b and s1 == s2 and is_code(z) == is_code(reverse(z))
            if is_code(z):
                ok = ok and decide_alt_induced(z).verdict is decide_alt_induced(reverse(z)).verdict
            count += 1
            agree += ok
        assert count == TRIALS and agree == TRIALS


def test_7f_kraft_multiplicative():
    with criterion("7f Kraft multiplicative under unambiguity") as d:
        count = agree = applicable = 0
        for rng, k in _trials(606):
            x, y = _rand_factor(rng, k), _rand_factor(rng, k)
            alphabet = "abc"[:k]
            x, y = Language(x, alphabet=alphabet), Language(y, alphabet=alphabet)
            count += 1
            if check_unambiguous(x, y).unambiguous:
                applicable += 1
                agree += kraft_sum(product(x, y)) == kraft_sum(x) * kraft_sum(y)
            else:
                agree += 1
        assert count == TRIALS and agree == TRIALS and applicable > 0
        d["applicable"] = applicable


def test_8_bench_hard_instances(tmp_path, capsys):
    with criterion("8 bench over hard instances") as d:
        out = tmp_path / "bench.csv"
        records = bench_fic("kind=hard;k=2;n=4,6,8,10,12;maxlen=5;reps=5;seed=0", out)
        medians = median_candidates_by_n(records)
        assert list(medians) == [4, 6, 8, 10, 12]
        values = list(medians.values())
        assert all(a < b for a, b in zip(values, values[1:]))
        assert all(r.valid and r.verdict in ("AltInduced", "budget") for r in records)
        f = tmp_path / "z.txt"
        f.write_text("\n".join(product(X2, Y2)) + "\n")
        assert main(["decide", str(f), "--budget", "5"]) == EXIT_BUDGET
        capsys.readouterr()
        d["medians"] = medians
