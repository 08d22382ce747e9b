import pytest

from rectdrop.bench import fit_slope, rows_to_csv, run_bench, series


@pytest.mark.parametrize("dist", ["uniform", "funnel", "zipf"])
def test_distributions_produce_full_rows(dist):
    rows = run_bench([128, 256], dist=dist, queries=6, updates=6)
    ops = {(r.n, r.op) for r in rows}
    assert ops == {
        (n, op)
        for n in (128, 256)
        for op in ("build", "query", "oracle_query", "update")
    }
    assert all(r.mean_ns > 0 and r.p99_ns >= r.mean_ns * 0.1 for r in rows)
    assert all(r.chunks >= 1 for r in rows)


def test_unknown_distribution_rejected():
    with pytest.raises(ValueError):
        run_bench([64], dist="bogus")


def test_csv_schema():
    rows = run_bench([64], dist="uniform", queries=4, updates=4)
    lines = rows_to_csv(rows).strip().splitlines()
    assert lines[0] == "n,op,mean_ns,p99_ns,chunks"
    assert all(len(line.split(",")) == 5 for line in lines[1:])


def test_fit_slope_recovers_known_exponent():
    pts = [(n, 3.5 * n**0.5) for n in (1024, 2048, 4096, 8192)]
    assert abs(fit_slope(pts) - 0.5) < 1e-9
    pts = [(n, 0.2 * n * max(1, n.bit_length())) for n in (1024, 2048, 4096, 8192)]
    assert 1.0 <= fit_slope(pts) <= 1.15


def test_series_extraction():
    rows = run_bench([64], dist="uniform", queries=4, updates=4)
    assert series(rows, "query") == [(64, next(r.mean_ns for r in rows if r.op == "query"))]
