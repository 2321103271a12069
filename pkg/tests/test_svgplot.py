import numpy as np

from localfisher.svgplot import PALETTE, UNLABELED_COLOR, render_scatter_svg


class TestRenderScatterSvg:
    def test_deterministic_bytes(self):
        rng = np.random.default_rng(95)
        xs, ys = rng.normal(size=20), rng.normal(size=20)
        labels = [f"c{i % 3}" for i in range(20)]
        first = render_scatter_svg(xs, ys, labels)
        second = render_scatter_svg(xs.copy(), ys.copy(), list(labels))
        assert first == second

    def test_one_circle_per_point_and_legend(self):
        xs = np.array([0.0, 1.0, 2.0, 3.0])
        ys = np.array([0.0, 1.0, 0.0, 1.0])
        svg = render_scatter_svg(xs, ys, ["a", "b", "a", "b"])
        assert svg.count("<circle") == 4
        assert svg.count('class="legend"') == 2
        assert ">a</text>" in svg and ">b</text>" in svg

    def test_first_appearance_palette_order(self):
        svg = render_scatter_svg([0.0, 1.0], [0.0, 1.0], ["late", "early"][::-1])
        # "early" appears first, so it takes the first palette slot
        early_pos = svg.index(">early</text>")
        assert PALETTE[0] in svg[:early_pos]

    def test_single_point(self):
        svg = render_scatter_svg([1.5], [-2.0], ["solo"])
        assert svg.count("<circle") == 1
        assert svg.startswith("<?xml")
        assert svg.rstrip().endswith("</svg>")

    def test_unlabeled_points_get_gray_and_legend_entry(self):
        svg = render_scatter_svg([0.0, 1.0], [0.0, 1.0], ["a", None])
        assert UNLABELED_COLOR in svg
        assert "(unlabeled)" in svg

    def test_no_labels_at_all(self):
        svg = render_scatter_svg([0.0, 1.0], [0.0, 1.0])
        assert svg.count("<circle") == 2
        assert 'class="legend"' not in svg

    def test_axis_labels(self):
        svg = render_scatter_svg([0.0, 1.0], [0.0, 1.0], xlabel="Z1", ylabel="Z3")
        assert ">Z1</text>" in svg
        assert ">Z3</text>" in svg

    def test_label_text_is_escaped(self):
        svg = render_scatter_svg([0.0], [0.0], ["a<b&c"])
        assert "a&lt;b&amp;c" in svg
