"""
Reader and writer for the plain-text complex format.

Format::

    # comment
    n 7
    0 1 3
    0 1 5
    ...

The header ``n <n_vertices>`` comes first; every other non-blank line lists
one facet as ascending vertex indices. Only top faces are stored; the closure
is recomputed on load.
"""

import logging
from importlib import resources
from pathlib import Path
from typing import List, Optional, Union

from ..errors import ComplexParseError
from .models import Simplex, SimplicialComplex
from .operations import from_facets

BUNDLED = {
    "torus": "torus7.cplx",
    "rp2": "rp2_6.cplx",
    "dunce_hat": "dunce_hat8.cplx",
    "cp2": "cp2_9.cplx",
    "klein_bottle": "klein_bottle9.cplx",
    "wedge": "wedge_s2_s1_s1.cplx",
    "empty_triangle": "empty_triangle.cplx",
}


class ComplexFileParser:
    """
    Line-oriented parser for ``.cplx`` text.
    """

    def __init__(self, source: str = "<string>", silent: bool = True):
        """
        Initialize the parser.

        Args:
            source: Name used in error messages (usually the file path)
            silent: Whether to suppress debug output
        """
        self.source = source
        self.logger = logging.getLogger(f"pyrsc.fileformat.{Path(source).name}")
        if silent:
            self.logger.setLevel(logging.WARNING)
        else:
            self.logger.setLevel(logging.DEBUG)

    def _error(self, reason: str, line_number: int) -> ComplexParseError:
        return ComplexParseError(reason, line_number, self.source)

    def parse(self, text: str) -> SimplicialComplex:
        n_vertices: Optional[int] = None
        facets: List[Simplex] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if n_vertices is None:
                if tokens[0] != "n" or len(tokens) != 2:
                    raise self._error("expected header 'n <n_vertices>'", line_number)
                n_vertices = self._parse_int(tokens[1], line_number)
                self.logger.debug(f"Header: n_vertices={n_vertices}")
                continue
            if tokens[0] == "n":
                raise self._error("duplicate header", line_number)
            facet = tuple(self._parse_int(t, line_number) for t in tokens)
            for a, b in zip(facet, facet[1:]):
                if a >= b:
                    raise self._error(f"facet {facet} is not strictly ascending", line_number)
            if facet[-1] >= n_vertices:
                raise self._error(
                    f"vertex {facet[-1]} out of range for n_vertices={n_vertices}", line_number
                )
            facets.append(facet)
        if n_vertices is None:
            raise self._error("missing header 'n <n_vertices>'", 1)
        complex_ = from_facets(facets, n_vertices)
        self.logger.debug(f"Parsed {len(facets)} facets, f-vector {complex_.f_vector}")
        return complex_

    def _parse_int(self, token: str, line_number: int) -> int:
        try:
            value = int(token)
        except ValueError:
            raise self._error(f"invalid integer {token!r}", line_number) from None
        if value < 0:
            raise self._error(f"negative integer {value}", line_number)
        return value


def loads_complex(text: str, source: str = "<string>") -> SimplicialComplex:
    return ComplexFileParser(source).parse(text)


def load_complex(path: Union[str, Path], silent: bool = True) -> SimplicialComplex:
    """
    Load a complex from a ``.cplx`` file.

    Args:
        path: Path to the file
        silent: Whether to suppress debug output

    Returns:
        The parsed complex
    """
    path = Path(path)
    return ComplexFileParser(str(path), silent).parse(path.read_text(encoding="utf-8"))


def dump_complex(K: SimplicialComplex, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"# f-vector {K.f_vector}")
    lines.append(f"n {K.n_vertices}")
    lines.extend(" ".join(str(v) for v in facet) for facet in K.facets)
    return "\n".join(lines) + "\n"


def save_complex(
    K: SimplicialComplex, path: Union[str, Path], comment: Optional[str] = None
) -> Path:
    path = Path(path)
    path.write_text(dump_complex(K, comment), encoding="utf-8")
    return path


def bundled_names() -> List[str]:
    return sorted(BUNDLED)


def load_bundled(name: str) -> SimplicialComplex:
    """Load one of the triangulations shipped in ``pyrsc/data``.

    Names: torus, rp2, dunce_hat, cp2, klein_bottle, wedge, empty_triangle.
    """
    if name not in BUNDLED:
        raise KeyError(f"Unknown bundled complex {name!r}; choose from {bundled_names()}")
    text = resources.files("pyrsc.data").joinpath(BUNDLED[name]).read_text(encoding="utf-8")
    return ComplexFileParser(BUNDLED[name]).parse(text)
