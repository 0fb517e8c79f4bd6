# cython: language_level=3
"""Compiled polynomial kernel: multiply-accumulate over packed-key dicts.

Same contract as ``_poly_kernel_py.mul``.  Keys and coefficients stay
arbitrary-precision Python ints; the win over the pure kernel is the
C-level accumulation loop (the inner operand is staged into flat arrays
once instead of re-walking its hash table per outer term).
"""

from cpython.dict cimport PyDict_GetItem, PyDict_Next, PyDict_SetItem
from cpython.mem cimport PyMem_Free, PyMem_Malloc
from cpython.object cimport PyObject

KERNEL_NAME = "cython"


def mul(dict a, dict b):
    cdef dict out = {}
    cdef Py_ssize_t pos = 0, nb, i
    cdef PyObject *ka
    cdef PyObject *ca
    cdef PyObject *kb
    cdef PyObject *cb
    cdef PyObject *prev
    cdef PyObject **bkeys
    cdef PyObject **bcoeffs
    cdef object k, c
    if len(a) > len(b):
        a, b = b, a
    nb = len(b)
    if nb == 0 or len(a) == 0:
        return out
    bkeys = <PyObject **>PyMem_Malloc(nb * sizeof(PyObject *))
    bcoeffs = <PyObject **>PyMem_Malloc(nb * sizeof(PyObject *))
    if bkeys == NULL or bcoeffs == NULL:
        PyMem_Free(bkeys)
        PyMem_Free(bcoeffs)
        raise MemoryError()
    try:
        i = 0
        while PyDict_Next(b, &pos, &kb, &cb):
            bkeys[i] = kb  # borrowed refs; b is kept alive for the call
            bcoeffs[i] = cb
            i += 1
        pos = 0
        while PyDict_Next(a, &pos, &ka, &ca):
            for i in range(nb):
                k = <object>ka + <object>bkeys[i]
                c = <object>ca * <object>bcoeffs[i]
                prev = PyDict_GetItem(out, k)
                if prev is not NULL:
                    c = <object>prev + c
                PyDict_SetItem(out, k, c)
    finally:
        PyMem_Free(bkeys)
        PyMem_Free(bcoeffs)
    return {kk: cc for kk, cc in out.items() if cc}
