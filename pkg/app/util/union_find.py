from typing import Callable, Hashable, Iterable


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self) -> list[list]:
        """동치류 목록 - 각 류는 정렬, 류들은 최소 원소 순"""
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(sorted(g) for g in groups.values())


def find_orbits(gens: Iterable, space: Iterable, action: Callable) -> list[list]:
    """생성원 작용의 궤도"""
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    return uf.classes()
