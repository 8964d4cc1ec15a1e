from app.utils.union_find import UnionFind


def test_union_and_find():
    uf = UnionFind(5)
    assert uf.union(0, 1)
    assert uf.union(3, 4)
    assert not uf.union(1, 0)
    assert uf.find(0) == uf.find(1)
    assert uf.find(1) != uf.find(3)
    assert len(uf) == 3


def test_labels_follow_blocks():
    uf = UnionFind(4)
    uf.union(2, 0)
    labels = uf.labels()
    assert labels[0] == labels[2]
    assert len(set(labels)) == 3
