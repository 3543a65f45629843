"""
FlatBuffers schema and builder for binary complex snapshots.

Schema (conceptual):

table ComplexFB {
  // One entry per facet: number of vertices in the facet.
  facet_sizes:[ubyte];
  // Facet vertices, concatenated in facet order.
  vertices:[uint32];
  n_vertices:uint32;
}

root_type ComplexFB;

"""

from __future__ import annotations

from typing import List, cast

import flatbuffers  # type: ignore[import-untyped]

from ..errors import ComplexInputError
from .models import SimplicialComplex
from .operations import from_facets


class ComplexFB(object):
    __slots__ = [
        "_tab",
    ]

    @classmethod
    def GetRootAsComplexFB(cls, buf: bytes, offset: int = 0) -> "ComplexFB":
        n = flatbuffers.encode.Get(flatbuffers.packer.uoffset, buf, offset)
        x = ComplexFB()
        x.Init(buf, n + offset)
        return x

    # Field slot -> vtable offset mapping: offset = 4 + slot_index * 2
    # Slots: 0:facet_sizes, 1:vertices, 2:n_vertices
    VT_FACET_SIZES = 4
    VT_VERTICES = 6
    VT_N_VERTICES = 8

    def Init(self, buf: bytes, pos: int) -> None:
        self._tab = flatbuffers.table.Table(buf, pos)

    def NVertices(self) -> int:
        o = self._tab.Offset(ComplexFB.VT_N_VERTICES)
        return (
            cast(int, self._tab.Get(flatbuffers.number_types.Uint32Flags, o + self._tab.Pos))
            if o
            else 0
        )

    def FacetSizes(self, j: int) -> int:
        o = self._tab.Offset(ComplexFB.VT_FACET_SIZES)
        if o == 0:
            return 0
        a = self._tab.Vector(o)
        return cast(int, self._tab.Get(flatbuffers.number_types.Uint8Flags, a + j * 1))

    def FacetSizesLength(self) -> int:
        o = self._tab.Offset(ComplexFB.VT_FACET_SIZES)
        return self._tab.VectorLen(o) if o else 0

    def Vertices(self, j: int) -> int:
        o = self._tab.Offset(ComplexFB.VT_VERTICES)
        if o == 0:
            return 0
        a = self._tab.Vector(o)
        return cast(int, self._tab.Get(flatbuffers.number_types.Uint32Flags, a + j * 4))

    def VerticesLength(self) -> int:
        o = self._tab.Offset(ComplexFB.VT_VERTICES)
        return self._tab.VectorLen(o) if o else 0


def _create_u8_vector(builder: flatbuffers.Builder, data: List[int]) -> int:
    builder.StartVector(1, len(data), 1)
    for v in reversed(data):
        builder.PrependUint8(v & 0xFF)
    return cast(int, builder.EndVector())


def _create_u32_vector(builder: flatbuffers.Builder, data: List[int]) -> int:
    builder.StartVector(4, len(data), 4)
    for v in reversed(data):
        builder.PrependUint32(v & 0xFFFFFFFF)
    return cast(int, builder.EndVector())


def build_complex_flatbuffer(K: SimplicialComplex) -> bytes:
    """Build a FlatBuffers buffer holding the facets of K."""
    facets = K.facets
    if any(len(f) > 0xFF for f in facets):
        raise ComplexInputError("Facets with more than 255 vertices cannot be snapshotted")
    sizes = [len(f) for f in facets]
    flat = [v for f in facets for v in f]

    builder = flatbuffers.Builder(0)

    v_sizes = _create_u8_vector(builder, sizes)
    v_vertices = _create_u32_vector(builder, flat)

    builder.StartObject(3)
    builder.PrependUOffsetTRelativeSlot(0, v_sizes, 0)
    builder.PrependUOffsetTRelativeSlot(1, v_vertices, 0)
    builder.PrependUint32Slot(2, int(K.n_vertices), 0)
    complex_obj = builder.EndObject()

    builder.Finish(complex_obj)
    return bytes(builder.Output())


def load_complex_flatbuffer(buf: bytes) -> SimplicialComplex:
    """Rebuild a complex from :func:`build_complex_flatbuffer` output."""
    fb = ComplexFB.GetRootAsComplexFB(buf, 0)
    facets = []
    pos = 0
    for j in range(fb.FacetSizesLength()):
        size = fb.FacetSizes(j)
        facets.append([fb.Vertices(pos + i) for i in range(size)])
        pos += size
    if pos != fb.VerticesLength():
        raise ComplexInputError("Snapshot facet sizes do not match its vertex vector")
    return from_facets(facets, fb.NVertices())
