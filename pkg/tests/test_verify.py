"""Verification campaign plumbing: grids, scans, records, and rendering."""

import pytest

from middom import (
    DEFAULT_GRID,
    NordhausGaddumRecord,
    TheoremId,
    nordhaus_gaddum_bounds,
    nordhaus_gaddum_scan,
    path,
    render_csv,
    render_ng_csv,
    render_text,
    verify_theorem,
)
from middom.verify import (
    _RUNNERS,
    _depth2_binary_tree,
    _encode_mask,
    _tree_classes,
    _tree_key,
    _worker_count,
)


class TestGridCoverage:
    def test_every_statement_has_a_runner_and_a_grid(self):
        assert set(_RUNNERS) == set(TheoremId)
        assert set(DEFAULT_GRID) == set(TheoremId)


class TestCampaigns:
    def test_star_campaign_rows(self):
        report = verify_theorem(TheoremId.STAR_FORMULA, max_n=4)
        assert report.passed
        assert [dict(r.params)["n"] for r in report.instances] == [2, 3, 4]
        assert all(r.witness_size == r.got for r in report.instances)
        assert report.counts == (3, 0)

    def test_clamp_can_empty_a_campaign(self):
        report = verify_theorem(TheoremId.JOIN_EMPTY_FORMULA, max_n=2)
        assert report.instances == () and report.passed

    def test_scan_campaign_counts_graphs(self):
        report = verify_theorem(TheoremId.GENERAL_BOUNDS, max_n=4)
        rows = {dict(r.params)["n"]: dict(r.params)["graphs"]
                for r in report.instances}
        assert rows == {3: 4, 4: 38}
        assert report.passed

    def test_leaf_bound_campaign(self):
        report = verify_theorem(TheoremId.LEAF_LOWER_BOUND, max_n=5)
        assert report.passed
        named = [r for r in report.instances
                 if dict(r.params).get("tree") == "binary-7"]
        assert len(named) == 1 and named[0].got == 5

    def test_explicit_worker_count(self):
        report = verify_theorem(TheoremId.HAM_PATH_FORMULA, max_n=4,
                                workers=2)
        assert report.passed
        assert dict(report.instances[-1].params)["graphs"] == 34

    def test_csv_deterministic_across_runs(self):
        first = render_csv([verify_theorem(TheoremId.CORONA_IDENTITY,
                                           max_n=4)])
        second = render_csv([verify_theorem(TheoremId.CORONA_IDENTITY,
                                            max_n=4)])
        assert first == second
        assert first.splitlines()[0] == \
            "theorem,params,expected,got,witness_size,status"


class TestTreeClasses:
    def test_key_is_isomorphism_invariant(self):
        caterpillar = path(5)
        relabeled = caterpillar.induced_subgraph([4, 3, 2, 1, 0])
        straight = _tree_key(caterpillar)
        assert straight == _tree_key(
            type(caterpillar)(5, [(0, 4), (1, 4), (1, 3), (2, 3)]))
        assert straight == _tree_key(relabeled)

    def test_distinct_shapes_get_distinct_keys(self):
        from middom import star
        assert _tree_key(path(5)) != _tree_key(star(4))

    def test_classes_partition_labeled_trees(self):
        classes = _tree_classes(5)
        assert len(classes) == 3
        assert sum(count for _, count in classes) == 125

    def test_depth2_binary_tree_shape(self):
        t = _depth2_binary_tree()
        assert t.is_tree() and t.order == 7
        assert len(t.leaves()) == 4


class TestNordhausGaddumScan:
    def test_range_validation(self):
        with pytest.raises(ValueError, match="scan supports 2 <= n <= 6"):
            nordhaus_gaddum_scan(7)

    def test_order_four_census(self):
        records = nordhaus_gaddum_scan(4)
        assert len(records) == 18
        kept = [r for r in records if r.hypothesis_ok]
        assert len(kept) == 12
        assert all(r.within_bounds for r in kept)
        assert all(len(r.encoding) == 6 for r in records)

    def test_complement_pairing(self):
        records = {r.encoding: r for r in nordhaus_gaddum_scan(4)}
        flipped = {}
        for enc, r in records.items():
            other = "".join("1" if c == "0" else "0" for c in enc)
            assert records[other].gt_g == r.gt_gbar
            flipped[other] = r

    def test_cycle4_outside_hypothesis(self):
        from middom import cycle
        records = {r.encoding: r for r in nordhaus_gaddum_scan(4)}
        c4 = records[_encode_mask(4, cycle(4))]
        assert (c4.gt_g, c4.gt_gbar) == (3, 4)
        assert not c4.hypothesis_ok
        p4 = records[_encode_mask(4, path(4))]
        assert p4.hypothesis_ok
        assert (p4.sum, p4.product) == (6, 9)

    def test_record_validation(self):
        bounds = nordhaus_gaddum_bounds(4)
        with pytest.raises(ValueError, match="sum field"):
            NordhausGaddumRecord(4, "0" * 6, 3, 3, 7, 9, bounds, True)
        with pytest.raises(ValueError, match="product field"):
            NordhausGaddumRecord(4, "0" * 6, 3, 3, 6, 8, bounds, True)


class TestRendering:
    def test_text_report(self):
        report = verify_theorem(TheoremId.TREE_DIAM2, max_n=4)
        text = render_text([report])
        assert "tree-diam2" in text and "PASS" in text
        assert text.rstrip().endswith("ALL PASS")
        verbose = render_text([report], verbose=True)
        assert "n=3" in verbose

    def test_ng_csv_header(self):
        out = render_ng_csv(nordhaus_gaddum_scan(3))
        assert out.splitlines()[0] == \
            "n,encoding,gt_g,gt_gbar,sum,product,hypothesis_ok,within_bounds"


class TestWorkerCount:
    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("MIDDOM_WORKERS", "3")
        assert _worker_count() == 3

    def test_env_validation(self, monkeypatch):
        monkeypatch.setenv("MIDDOM_WORKERS", "many")
        with pytest.raises(ValueError, match="positive integer"):
            _worker_count()
        monkeypatch.setenv("MIDDOM_WORKERS", "-2")
        with pytest.raises(ValueError, match="positive integer"):
            _worker_count()

    def test_default_positive(self, monkeypatch):
        monkeypatch.delenv("MIDDOM_WORKERS", raising=False)
        assert _worker_count() >= 1
