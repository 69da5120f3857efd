import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rtview import Order, Tensor, create, create_uninitialized, from_values, matrix, vector, view_of
from rtview.errors import AllocationFailure, SizeMismatch, WriteToReadOnly, ZeroExtent
from rtview.view_core import check_invariants, coordinates

from oracles import all_coordinates, resize_oracle

small_shapes = st.lists(st.integers(1, 4), min_size=1, max_size=3).map(tuple)


def as_dict(t):
    return {c: t[c] for c in coordinates(t.descriptor)}


def assert_simple(t):
    assert t.simple
    assert t.offset == 0
    assert t.data.shape[0] == t.size
    assert check_invariants(t.descriptor) == []


class TestCreate:
    def test_fill(self):
        t = create((3, 2, 4), 1.0, order=Order.FCMO)
        assert t.size == 24 and t.order is Order.FCMO
        assert all(x == 1.0 for x in t)
        assert_simple(t)

    def test_default_zero(self):
        v = vector(42)
        assert v.shape == (42,)
        assert v.values().tolist() == [0.0] * 42

    def test_single(self):
        t = create((1,), 7.5)
        assert t.values().tolist() == [7.5]

    def test_zero_extent(self):
        with pytest.raises(ZeroExtent):
            create((3, 0))

    def test_uninitialized(self):
        t = create_uninitialized((3, 2, 4))
        assert t.size == 24
        assert_simple(t)
        for k in range(24):
            t[k] = k * 0.5
        assert t.values().tolist() == [k * 0.5 for k in range(24)]
        assert create_uninitialized((7, 8)).size == 56
        assert matrix(7, 8, initialize=False).shape == (7, 8)

    def test_kinds(self):
        for kind in ("f32", "f64", "i32", "i64", "u8"):
            t = create((2, 2), 3, kind=kind)
            assert t.kind == np.dtype({"f32": "float32", "f64": "float64", "i32": "int32",
                                       "i64": "int64", "u8": "uint8"}[kind])

    def test_allocation_failure(self):
        with pytest.raises(AllocationFailure):
            create((2**40, 2**22))

    def test_scalar_tensor(self):
        t = create((), 4)
        assert t.size == 1 and t[()] == 4


class TestReshape:
    def test_example_shape(self):
        t = from_values(np.arange(24.0), (3, 2, 4))
        before = t.values().copy()
        t.reshape((2, 2, 3, 2))
        assert t.shape == (2, 2, 3, 2) and t.size == 24
        assert t.values().tolist() == before.tolist()
        assert_simple(t)

    def test_matrix(self):
        m = from_values(np.arange(56.0), (7, 8))
        m.reshape((8, 7))
        for k in range(56):
            assert m[k] == k

    def test_same_shape(self):
        t = from_values(np.arange(6), (2, 3))
        t.reshape((2, 3))
        assert t.values().tolist() == list(range(6))

    def test_mismatch(self):
        with pytest.raises(SizeMismatch):
            create((3, 2, 4)).reshape((5, 5))

    @given(small_shapes, st.sampled_from(list(Order)), st.data())
    def test_flat_preservation(self, shape, order, data):
        t = from_values(np.arange(int(np.prod(shape))), shape, order=order)
        n = t.size
        d = data.draw(st.integers(1, 4))
        # random factorization of n into d extents
        new_shape = []
        rest = n
        for _ in range(d - 1):
            divisors = [x for x in range(1, rest + 1) if rest % x == 0]
            x = data.draw(st.sampled_from(divisors))
            new_shape.append(x)
            rest //= x
        new_shape.append(rest)
        before = [t[k] for k in range(n)]
        t.reshape(new_shape)
        assert [t[k] for k in range(n)] == before
        assert_simple(t)


class TestResize:
    def test_vector_to_matrix(self):
        t = from_values([10, 20, 30])
        t.resize((2, 2), 0)
        assert as_dict(t) == {(0, 0): 10, (1, 0): 20, (0, 1): 0, (1, 1): 0}
        assert as_dict(t) == resize_oracle((3,), {(0,): 10, (1,): 20, (2,): 30}, (2, 2), 0)

    def test_identity(self):
        t = from_values(np.arange(6.0), (2, 3))
        t.resize((2, 3), -1.0)
        assert t.values().tolist() == list(range(6))

    def test_vector_grow(self):
        v = from_values(np.arange(1.0, 43.0))
        v.resize((56,), -1.0)
        assert v.values().tolist() == list(range(1, 43)) + [-1.0] * 14

    def test_2d(self):
        t = from_values(np.arange(6), (2, 3))
        old = as_dict(t)
        t.resize((4, 2), 9)
        for c in coordinates(t.descriptor):
            if c[0] < 2 and c[1] < 2:
                assert t[c] == old[c]
            else:
                assert t[c] == 9

    def test_zero_extent(self):
        with pytest.raises(ZeroExtent):
            create((2,)).resize((0,))

    @given(small_shapes, small_shapes, st.sampled_from(list(Order)))
    def test_against_oracle(self, old_shape, new_shape, order):
        t = from_values(np.arange(1, int(np.prod(old_shape)) + 1), old_shape, order=order)
        old = as_dict(t)
        t.resize(new_shape, -7)
        assert t.order is order
        assert as_dict(t) == resize_oracle(old_shape, old, new_shape, -7)
        assert_simple(t)

    def test_same_size_differs_from_reshape(self):
        a = from_values(np.arange(6), (2, 3))
        b = from_values(np.arange(6), (2, 3))
        a.reshape((3, 2))
        b.resize((3, 2), -1)
        assert a.values().tolist() == [0, 1, 2, 3, 4, 5]
        old = {c: c[0] + 2 * c[1] for c in itertools.product(range(2), range(3))}
        assert as_dict(b) == resize_oracle((2, 3), old, (3, 2), -1)
        assert as_dict(b) != as_dict(a)


class TestViewOf:
    def test_whole(self):
        v = view_of(create((3, 2, 4)))
        assert v.shape == (3, 2, 4) and v.offset == 0 and v.simple

    def test_sub_view_squeeze(self):
        d20 = from_values(np.arange(8000.0), (20, 20, 20))
        v = view_of(d20).view((3, 2, 4), (5, 1, 5))
        v.squeeze()
        assert v.shape == (5, 5)
        for j, k in itertools.product(range(5), range(5)):
            assert v[j, k] == d20[3 + j, 2, 4 + k]

    def test_read_only(self):
        t = create((2, 2))
        r = view_of(t, readonly=True)
        with pytest.raises(WriteToReadOnly):
            r[0, 0] = 1.0
        with pytest.raises(WriteToReadOnly):
            t.const_view()[0] = 1.0

    def test_shares_buffer(self):
        t = create((2, 2))
        view_of(t)[1, 1] = 5.0
        assert t[1, 1] == 5.0


class TestTensorTransforms:
    def test_permute_keeps_simple(self):
        t = from_values(np.arange(24), (3, 2, 4))
        expected = {c: t[c[1], c[0], c[2]] for c in itertools.product(range(2), range(3), range(4))}
        t.permute((1, 0, 2))
        assert t.shape == (2, 3, 4)
        assert_simple(t)
        assert as_dict(t) == expected

    def test_chain(self):
        c = create((3, 2, 4))
        shapes = []
        c.permute((1, 0, 2)); shapes.append(c.shape)
        c.transpose(0, 2); shapes.append(c.shape)
        c.shift(-1); shapes.append(c.shape)
        c.shift(2); shapes.append(c.shape)
        c.transpose(); shapes.append(c.shape)
        assert shapes == [(2, 3, 4), (4, 3, 2), (3, 2, 4), (2, 4, 3), (3, 4, 2)]
        assert_simple(c)

    def test_squeeze_bind(self):
        t = from_values(np.arange(6), (3, 1, 2))
        t.squeeze()
        assert t.shape == (3, 2)
        assert_simple(t)
        t.bind(1, 1)
        assert t.values().tolist() == [3, 4, 5]
        assert_simple(t)

    def test_matrix_ctor(self):
        m = matrix(7, 8, 2.0)
        assert m.shape == (7, 8) and isinstance(m, Tensor)
        m.resize((2, 4))
        assert m.values().tolist() == [2.0] * 8

    @pytest.mark.parametrize("order", list(Order))
    def test_buffer_is_index_order(self, order):
        t = from_values(np.arange(24), (3, 2, 4), order=order)
        assert [t[c] for c in all_coordinates((3, 2, 4), order.name)] == list(range(24))
