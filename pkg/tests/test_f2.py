import random

from surfcodes import f2, gf


def random_rows(rng, n):
    return [rng.getrandbits(n) for _ in range(n)]


def brute_charpoly(rows, n):
    """det(xI - M) by Laplace expansion with exact F_2[x] arithmetic."""
    F2 = gf.make_field(2, 1)
    x = gf.Polynomial.x(F2)

    entries = [[gf.Polynomial(F2, ((rows[i] >> j) & 1,)) for j in range(n)]
               for i in range(n)]
    # xI - M entrywise; minus is plus over F_2
    mat = [[entries[i][j] + (x if i == j else gf.Polynomial.zero(F2))
            for j in range(n)] for i in range(n)]

    def det(m):
        k = len(m)
        if k == 1:
            return m[0][0]
        acc = gf.Polynomial.zero(F2)
        for j in range(k):
            if m[0][j].is_zero:
                continue
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            acc = acc + m[0][j] * det(minor)
        return acc

    return det(mat)


class TestRank:
    def test_identity(self):
        assert f2.rank(f2.identity_rows(10), 10) == 10

    def test_zero(self):
        assert f2.rank([0, 0, 0], 5) == 0
        assert f2.rank([], 5) == 0

    def test_duplicated_rows(self):
        assert f2.rank([0b101, 0b101, 0b011], 3) == 2

    def test_against_python_elimination(self):
        rng = random.Random(11)
        for n in (1, 2, 3, 7, 17, 40, 65, 130):
            rows = random_rows(rng, n)
            # plain int-row elimination as the oracle
            work = list(rows)
            rank = 0
            for c in range(n):
                piv = next((i for i in range(rank, n) if (work[i] >> c) & 1), None)
                if piv is None:
                    continue
                work[rank], work[piv] = work[piv], work[rank]
                for i in range(n):
                    if i != rank and (work[i] >> c) & 1:
                        work[i] ^= work[rank]
                rank += 1
            assert f2.rank(rows, n) == rank
            assert f2.kernel_dim(rows, n) == n - rank


class TestMatOps:
    def test_matmul_identity(self):
        rng = random.Random(3)
        rows = random_rows(rng, 9)
        assert f2.matmul_rows(rows, f2.identity_rows(9)) == rows
        assert f2.matmul_rows(f2.identity_rows(9), rows) == rows

    def test_transpose_involution(self):
        rng = random.Random(5)
        rows = random_rows(rng, 12)
        assert f2.transpose_rows(f2.transpose_rows(rows, 12), 12) == rows

    def test_kron_against_definition(self):
        rng = random.Random(9)
        a = random_rows(rng, 3)
        b = random_rows(rng, 4)
        k = f2.kron_rows(a, 3, b, 4)
        for i in range(3):
            for j in range(4):
                for s in range(3):
                    for t in range(4):
                        got = (k[i * 4 + j] >> (s * 4 + t)) & 1
                        want = ((a[i] >> s) & 1) & ((b[j] >> t) & 1)
                        assert got == want

    def test_matpow(self):
        # 4-cycle permutation matrix has order 4
        perm = [1 << ((i + 1) % 4) for i in range(4)]
        assert f2.matpow_rows(perm, 4, 4) == f2.identity_rows(4)
        assert f2.matpow_rows(perm, 2, 4) != f2.identity_rows(4)


class TestCharpoly:
    def test_small_against_laplace(self):
        rng = random.Random(21)
        for n in (1, 2, 3, 4, 5, 6):
            for _ in range(8):
                rows = random_rows(rng, n)
                got = f2.charpoly(rows, n)
                want = brute_charpoly(rows, n)
                assert gf.Polynomial(gf.make_field(2, 1), got) == want

    def test_cayley_hamilton(self):
        rng = random.Random(33)
        for n in (8, 13, 20):
            rows = random_rows(rng, n)
            cp = f2.charpoly(rows, n)
            assert len(cp) == n + 1 and cp[-1] == 1
            assert f2.poly_eval_rows(cp, rows, n) == f2.zero_rows(n)
