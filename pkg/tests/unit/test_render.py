from canonstrip.document import VerdictDocument
from canonstrip.hilbert import hilbert_projective
from canonstrip.ratpoly import RationalPolynomial
from canonstrip.render import render_svg, write_svg
from canonstrip.rootloc import classify_strip


def document(polynomial, dim, name):
    verdict = classify_strip(polynomial, dim)
    return VerdictDocument.from_verdict("strip", {"name": name}, verdict)


class TestRenderSvg:
    def test_root_markers(self):
        svg = render_svg([document(hilbert_projective(3), 3, "P3")])
        assert svg.startswith("<?xml")
        for index in range(3):
            assert f'id="root-0-{index}"' in svg
        assert 'id="root-0-3"' not in svg
        for kind in ("cs", "ncs", "cl"):
            assert f'id="guide-{kind}-0"' in svg

    def test_one_panel_per_document(self):
        documents = [
            document(RationalPolynomial([1, 2]), 1, "P1"),
            document(RationalPolynomial([2, 0, 1]), 2, "imaginary"),
        ]
        svg = render_svg(documents)
        assert 'id="root-0-0"' in svg
        assert 'id="root-1-1"' in svg
        assert 'id="guide-cl-1"' in svg

    def test_deterministic(self):
        documents = [document(hilbert_projective(2), 2, "P2")]
        assert render_svg(documents) == render_svg(documents)

    async def test_write_svg(self, tmp_path):
        path = tmp_path / "roots.svg"
        documents = [document(hilbert_projective(2), 2, "P2")]
        await write_svg(str(path), documents, width=3.0, height=3.0)
        assert path.read_text() == render_svg(documents, 3.0, 3.0)
