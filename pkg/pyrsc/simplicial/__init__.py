"""Finite simplicial complexes: construction, queries, collapses and file formats"""

from .models import Simplex, SimplicialComplex, FVector, make_simplex, codim_one_faces
from .faces import face_rank, face_unrank, face_count, iter_faces, faces_of
from .operations import (
    from_facets,
    f_vector,
    skeleton,
    link,
    induced_subcomplex,
    relabel,
    strong_components,
    is_pure,
    is_strongly_connected,
    has_complete_skeleton,
    simplex_complex,
    boundary_of_simplex,
    cone,
    disjoint_union,
    prime_suspension,
    plant_subcomplex,
    new_vertex_count,
    expand,
)
from .collapse import (
    DEFAULT_RESTARTS,
    free_faces,
    elementary_collapse,
    collapse_sequence,
    collapse_to_dim,
)
from .embeddings import count_embeddings, count_subcomplex_copies
from .fileformat import (
    BUNDLED,
    ComplexFileParser,
    load_complex,
    loads_complex,
    dump_complex,
    save_complex,
    load_bundled,
    bundled_names,
)
from .snapshot import ComplexFB, build_complex_flatbuffer, load_complex_flatbuffer

__all__ = [
    # Models
    "Simplex",
    "SimplicialComplex",
    "FVector",
    "make_simplex",
    "codim_one_faces",
    # Face ranking
    "face_rank",
    "face_unrank",
    "face_count",
    "iter_faces",
    "faces_of",
    # Operations
    "from_facets",
    "f_vector",
    "skeleton",
    "link",
    "induced_subcomplex",
    "relabel",
    "strong_components",
    "is_pure",
    "is_strongly_connected",
    "has_complete_skeleton",
    "simplex_complex",
    "boundary_of_simplex",
    "cone",
    "disjoint_union",
    "prime_suspension",
    "plant_subcomplex",
    "new_vertex_count",
    "expand",
    # Collapses
    "DEFAULT_RESTARTS",
    "free_faces",
    "elementary_collapse",
    "collapse_sequence",
    "collapse_to_dim",
    # Subcomplex counting
    "count_embeddings",
    "count_subcomplex_copies",
    # Text format
    "ComplexFileParser",
    "load_complex",
    "loads_complex",
    "dump_complex",
    "save_complex",
    "BUNDLED",
    "load_bundled",
    "bundled_names",
    # FlatBuffers snapshot
    "ComplexFB",
    "build_complex_flatbuffer",
    "load_complex_flatbuffer",
]
