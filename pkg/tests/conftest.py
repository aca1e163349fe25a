import numpy as np

from dilatekit import Xoshiro256StarStar


def stream(seed: int) -> Xoshiro256StarStar:
    return Xoshiro256StarStar(seed)


def random_complex(s: Xoshiro256StarStar, rows: int, cols: int) -> np.ndarray:
    return s.complex_normals((rows, cols))


def random_hermitian(s: Xoshiro256StarStar, n: int) -> np.ndarray:
    g = s.complex_normals((n, n))
    return (g + g.conj().T) / 2.0
