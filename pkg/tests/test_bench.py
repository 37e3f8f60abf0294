"""Workload generation, measurement rows, verification, report IO."""

import dataclasses
import io

import pytest

from polyroute import (
    CSV_HEADER,
    BenchError,
    BenchRow,
    LandmarkSet,
    WorkloadSpec,
    dijkstra_query,
    emit_report,
    format_summary,
    generate_grid,
    generate_queries,
    generate_random_connected,
    load_report,
    run_workload,
    select_farthest,
    select_random,
    summarize,
    verify_workload,
)


class TestGenerateQueries:
    def test_deterministic(self, grid3):
        spec = WorkloadSpec(50, seed=7)
        assert generate_queries(grid3, spec) == generate_queries(grid3, spec)

    def test_seed_changes_draw(self, grid3):
        a = generate_queries(grid3, WorkloadSpec(50, seed=1))
        b = generate_queries(grid3, WorkloadSpec(50, seed=2))
        assert a != b

    def test_no_self_queries(self):
        g = generate_random_connected(12, 5, 0)
        for s, t in generate_queries(g, WorkloadSpec(200, seed=3)):
            assert s != t
            assert 0 <= s < 12 and 0 <= t < 12

    def test_single_vertex_graph(self):
        g = generate_random_connected(1, 0, 0)
        assert generate_queries(g, WorkloadSpec(4)) == [(0, 0)] * 4

    def test_invalid_workload_spec(self):
        with pytest.raises(ValueError):
            WorkloadSpec(0)
        with pytest.raises(ValueError):
            WorkloadSpec(5, stratification="by-vibes")

    def test_stratified_covers_every_nonempty_decile(self, grid3):
        spec = WorkloadSpec(40, seed=9, stratification="by-distance-decile")
        queries = generate_queries(grid3, spec)
        assert len(queries) == 40
        assert all(s != t for s, t in queries)
        # max distance on the 3x3 grid is 4; deciles hit by d in 1..4
        max_d = 4
        seen = {
            min(9, 10 * dijkstra_query(grid3, s, t).distance // max_d)
            for s, t in queries
        }
        expected = {min(9, 10 * d // max_d) for d in (1, 2, 3, 4)}
        assert seen == expected

    def test_stratified_deterministic_on_larger_graph(self):
        g = generate_random_connected(150, 60, 4)
        spec = WorkloadSpec(30, seed=5, stratification="by-distance-decile")
        a = generate_queries(g, spec)
        assert a == generate_queries(g, spec)
        assert len(a) == 30


class TestRunWorkload:
    def test_p6_agreement_all_methods(self, p6):
        rows = run_workload(p6, LandmarkSet((0, 5)), [(1, 4)])
        assert [r.method for r in rows] == ["dijkstra", "alt", "alp"]
        assert all(r.distance == 3 for r in rows)
        assert all(r.source == 1 and r.target == 4 for r in rows)

    def test_dijkstra_rows_have_no_arithmetic(self, p6):
        (row,) = run_workload(p6, LandmarkSet((0, 5)), [(0, 5)],
                              methods=("dijkstra",))
        assert (row.heuristic_evals, row.subs, row.muls, row.divs) \
            == (0, 0, 0, 0)
        assert (row.s1, row.s2, row.s3, row.s4, row.s5) == (0, 0, 0, 0, 0)

    def test_scenario_histogram_accounts_every_eval(self):
        g = generate_random_connected(60, 30, 2)
        L = select_random(g, 4, 2)
        queries = generate_queries(g, WorkloadSpec(25, seed=8))
        for row in run_workload(g, L, queries, methods=("alp",)):
            assert row.s1 + row.s2 + row.s3 + row.s4 + row.s5 \
                == row.heuristic_evals

    def test_alt_subs_equal_evals_times_k(self):
        g = generate_random_connected(40, 20, 6)
        L = select_random(g, 4, 6)
        queries = generate_queries(g, WorkloadSpec(10, seed=1))
        for row in run_workload(g, L, queries, methods=("alt",)):
            assert row.subs == 4 * row.heuristic_evals
            assert row.muls == 0 and row.divs == 0

    def test_goal_direction_beats_blind_search_on_grid(self):
        g = generate_grid(20, 20)
        L = select_farthest(g, 2, 0)
        rows = run_workload(g, L, [(0, 399)],
                            methods=("dijkstra", "alt"))
        by_method = {r.method: r for r in rows}
        assert by_method["alt"].settled < by_method["dijkstra"].settled

    def test_unknown_method_rejected(self, p6):
        with pytest.raises(ValueError):
            run_workload(p6, LandmarkSet((0,)), [(0, 1)], methods=("bfs",))

    def test_timing_flag_populates_wall_time(self, p6):
        rows = run_workload(p6, LandmarkSet((0, 5)), [(0, 5)], timing=True)
        assert all(r.wall_time_ns > 0 for r in rows)
        rows = run_workload(p6, LandmarkSet((0, 5)), [(0, 5)])
        assert all(r.wall_time_ns == 0 for r in rows)

    def test_mode_and_ptolemy_forwarded(self, p6):
        lit = run_workload(p6, LandmarkSet((0, 5)), [(1, 4)],
                           methods=("alp",))[0]
        opt = run_workload(p6, LandmarkSet((0, 5)), [(1, 4)],
                           methods=("alp",), mode="optimized")[0]
        assert lit.distance == opt.distance
        assert opt.subs < lit.subs


class TestVerifyWorkload:
    def test_clean_report(self):
        g = generate_random_connected(50, 20, 1)
        L = select_random(g, 3, 1)
        rows = run_workload(g, L, generate_queries(g, WorkloadSpec(15)))
        report = verify_workload(g, rows)
        assert report.ok
        assert report.checked == len(rows) == 45
        assert report.violations == []

    def test_single_fault_detected(self):
        g = generate_random_connected(30, 10, 2)
        L = select_random(g, 3, 2)
        rows = run_workload(g, L, generate_queries(g, WorkloadSpec(8)))
        bad = dataclasses.replace(rows[4], distance=rows[4].distance + 1)
        rows[4] = bad
        report = verify_workload(g, rows)
        assert not report.ok
        assert len(report.violations) == 1
        v = report.violations[0]
        assert v["row"] == 4
        assert v["reported"] == bad.distance
        assert v["expected"] == bad.distance - 1


class TestReportIO:
    def _rows(self):
        g = generate_random_connected(25, 10, 3)
        L = select_random(g, 3, 3)
        return run_workload(g, L, generate_queries(g, WorkloadSpec(6)))

    def test_csv_round_trip(self):
        rows = self._rows()
        sink = io.StringIO()
        emit_report(rows, "csv", sink)
        text = sink.getvalue()
        assert text.splitlines()[0] == ",".join(CSV_HEADER)
        assert load_report(io.StringIO(text), "csv") == rows

    def test_json_round_trip(self):
        rows = self._rows()
        sink = io.StringIO()
        emit_report(rows, "json", sink)
        assert load_report(io.StringIO(sink.getvalue()), "json") == rows

    def test_csv_repeatable_byte_for_byte(self):
        rows = self._rows()
        a, b = io.StringIO(), io.StringIO()
        emit_report(rows, "csv", a)
        emit_report(rows, "csv", b)
        assert a.getvalue() == b.getvalue()

    def test_empty_rows_header_only(self):
        sink = io.StringIO()
        emit_report([], "csv", sink)
        assert sink.getvalue() == ",".join(CSV_HEADER) + "\n"
        assert load_report(io.StringIO(sink.getvalue()), "csv") == []

    def test_header_mismatch_rejected(self):
        with pytest.raises(ValueError, match="header"):
            load_report(io.StringIO("method,source\nalt,1\n"), "csv")

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            emit_report([], "xml", io.StringIO())


class TestSummarize:
    def test_means_and_totals(self):
        rows = [
            BenchRow("alp", 0, 1, 5, 10, 12, 2, 6, 30, 4, 2,
                     s1=1, s2=2, s3=3, s4=0, s5=0),
            BenchRow("alp", 1, 2, 7, 20, 20, 0, 10, 50, 6, 4,
                     s1=2, s2=0, s3=8, s4=0, s5=0),
            BenchRow("dijkstra", 0, 1, 5, 30, 30, 0, 0, 0, 0, 0),
        ]
        s = summarize(rows)
        alp = s["alp"]
        assert alp["queries"] == 2
        assert alp["mean_settled"] == 15.0
        assert alp["mean_subs"] == 40.0
        assert alp["mean_arith_total"] == (36 + 60) / 2
        assert alp["total_s1"] == 3
        assert alp["total_s3"] == 11
        assert s["dijkstra"]["mean_settled"] == 30.0
        assert "total_s1" not in s["dijkstra"]

    def test_format_summary_is_stable_text(self):
        rows = self._mini()
        assert format_summary(summarize(rows)) \
            == format_summary(summarize(rows))
        assert "alp" in format_summary(summarize(rows))

    def _mini(self):
        g = generate_random_connected(20, 8, 9)
        L = select_random(g, 2, 9)
        return run_workload(g, L, [(0, 19), (3, 11)])
