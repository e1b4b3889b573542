"""Distances and similarities on the feature lattice

Two problems are adjacent when they differ by one rank step in exactly one
feature. The shortest path length between two lattice points is the rank
L1 distance, computed in closed form by lattice_distance. LatticeGraph
materializes the lattice and recovers the same number as the least power l
for which the (a, b) entry of the adjacency matrix B**l is nonzero; it is
kept as an oracle for verification.
"""
import itertools
import logging
from fractions import Fraction

import networkx
import numpy

from .common import DistanceError, CbdtStatus
from .featurespace import FeatureSpace, Problem

try:
    from typing import Dict, Iterable, Optional, Tuple
except ImportError:  # pragma: no cover
    pass


_LOGGER = logging.getLogger(__name__)

LATTICE_CAP = 10000


def _ranks(space, problem, role="problem"):
    if not isinstance(problem, Problem):
        raise DistanceError("{} {!r} is not a Problem".format(role, problem))
    unknown = [i for i in problem.feature_ids if i not in space]
    if len(unknown) > 0:
        raise DistanceError(
            "{} {} has features {} outside the space {}".format(
                role, problem, unknown, list(space.ids)
            )
        )
    ranks = []
    for feature in space:
        label = problem.get(feature.id)
        if label is None:
            raise DistanceError(
                "{} {} is incomplete, it has no value for feature {}".format(
                    role, problem, feature.id
                )
            )
        if label not in feature:
            raise DistanceError(
                "{} {} has value {} outside the range {} of feature "
                "{}".format(
                    role, problem, label, list(feature.values), feature.id
                )
            )
        ranks.append(feature.rank(label))
    return tuple(ranks)


def lattice_distance(space, a, b):
    # type: (FeatureSpace, Problem, Problem) -> int
    """Sum over features of the absolute rank difference of a and b"""
    ranks_a = _ranks(space, a, "problem")
    ranks_b = _ranks(space, b, "problem")
    return sum(abs(x - y) for x, y in zip(ranks_a, ranks_b))


def diameter(space):
    # type: (FeatureSpace) -> int
    """Largest lattice distance in space: sum of (kappa - 1) over features.

    0 means every feature is single valued; similarity then treats every
    pair as maximally similar.
    """
    return sum(feature.kappa - 1 for feature in space)


class LatticeGraph(object):
    """Materialized feature lattice with its adjacency matrix

    Args
    ----
    - space (FeatureSpace): the space whose lattice is built
    - problems (Iterable[Problem]): restrict the node set to these lattice
      points, None keeps the full lattice
    - cap (int): largest node count allowed
    """

    def __init__(self, space, problems=None, cap=LATTICE_CAP):
        self._space = space
        if problems is None:
            if space.lattice_size > cap:
                raise DistanceError(
                    "lattice of {} points exceeds the cap of {}".format(
                        space.lattice_size, cap
                    )
                )
            nodes = list(
                itertools.product(*[range(f.kappa) for f in space])
            )
        else:
            nodes = []
            for problem in problems:
                ranks = _ranks(space, problem)
                if ranks not in nodes:
                    nodes.append(ranks)
            if len(nodes) > cap:
                raise DistanceError(
                    "node set of {} points exceeds the cap of {}".format(
                        len(nodes), cap
                    )
                )
        self._index = dict((node, i) for i, node in enumerate(nodes))
        self._graph = networkx.Graph()
        self._graph.add_nodes_from(nodes)
        for node in nodes:
            for j in range(len(node)):
                neighbour = node[:j] + (node[j] + 1,) + node[j + 1 :]
                if neighbour in self._index:
                    self._graph.add_edge(node, neighbour)
        self._adjacency = networkx.to_scipy_sparse_array(
            self._graph, nodelist=nodes, dtype=numpy.int64, format="csr"
        )
        _LOGGER.debug(
            "lattice graph with {} nodes and {} edges".format(
                self._graph.number_of_nodes(), self._graph.number_of_edges()
            )
        )

    @property
    def graph(self):
        return self._graph

    @property
    def adjacency(self):
        """Sparse adjacency matrix B in node order"""
        return self._adjacency

    def __len__(self):
        return len(self._index)

    def _node(self, problem):
        ranks = _ranks(self._space, problem)
        if ranks not in self._index:
            raise DistanceError(
                "{} is not a node of the lattice graph".format(problem)
            )
        return self._index[ranks]

    def distance(self, a, b):
        # type: (Problem, Problem) -> int
        """Least l with a nonzero (a, b) entry in B**l.

        Row vector e_a is multiplied by B once per step and clipped to 0/1 so
        the entries stay bounded; reaching no new node means b is not
        connected to a.
        """
        start, target = self._node(a), self._node(b)
        if start == target:
            return 0
        walk = numpy.zeros(len(self._index), dtype=numpy.int64)
        walk[start] = 1
        reached = walk.astype(bool)
        power = 0
        while True:
            power += 1
            walk = numpy.minimum(self._adjacency.dot(walk), 1)
            if walk[target] != 0:
                return power
            grown = numpy.logical_or(reached, walk.astype(bool))
            if grown.sum() == reached.sum():
                raise DistanceError(
                    "no path joins {} and {} in the given node set".format(
                        a, b
                    )
                )
            reached = grown


def matrix_power_distance(space, problems, a, b, cap=LATTICE_CAP):
    # type: (FeatureSpace, Optional[Iterable[Problem]], Problem, Problem, int) -> int
    """Shortest path length from the powers of the adjacency matrix.

    problems restricts the node set, None uses the full lattice.
    """
    return LatticeGraph(space, problems=problems, cap=cap).distance(a, b)


class SimilarityTable(object):
    """Similarities of a query problem to every history problem

    Entries keep history order. diameter_used is 0 for a degenerate space,
    in which case every similarity is 1.
    """

    __slots__ = ("_query", "_problems", "_distances", "_diameter")

    def __init__(self, query, problems, distances, diameter_used):
        self._query = query
        self._problems = tuple(problems)
        self._distances = tuple(distances)
        self._diameter = diameter_used

    @property
    def query(self):
        return self._query

    @property
    def diameter_used(self):
        return self._diameter

    @property
    def degenerate(self):
        return self._diameter == 0

    @property
    def problems(self):
        # type: () -> Tuple[Problem, ...]
        return self._problems

    @property
    def distances(self):
        # type: () -> Dict[Problem, int]
        return dict(zip(self._problems, self._distances))

    def similarity_of(self, distance):
        if self._diameter == 0:
            return Fraction(1)
        return 1 - Fraction(distance, self._diameter)

    @property
    def entries(self):
        # type: () -> Dict[Problem, Fraction]
        return dict(
            (p, self.similarity_of(d))
            for p, d in zip(self._problems, self._distances)
        )

    def rows(self):
        """(problem, distance, similarity) in history order"""
        return [
            (p, d, self.similarity_of(d))
            for p, d in zip(self._problems, self._distances)
        ]

    def __getitem__(self, problem):
        return self.entries[problem]

    def __len__(self):
        return len(self._problems)

    def __repr__(self):
        return "SimilarityTable({!r}, D={}, {})".format(
            self._query,
            self._diameter,
            [str(s) for _, _, s in self.rows()],
        )


class DistanceReport(object):
    """Pairwise distances and similarities of the history problems

    pairwise holds (i, j, q_i, q_j, distance, similarity) for i < j in
    history order.
    """

    __slots__ = ("pairwise", "diameter", "query_distances", "problems")

    def __init__(self, pairwise, diameter, query_distances=None, problems=()):
        self.pairwise = pairwise
        self.diameter = diameter
        self.query_distances = query_distances or {}
        self.problems = tuple(problems)

    @property
    def degenerate(self):
        return self.diameter == 0

    def distance(self, a, b):
        for _, _, p, q, d, _ in self.pairwise:
            if (p, q) == (a, b) or (p, q) == (b, a):
                return d
        if a == b:
            return 0
        raise KeyError((a, b))

    def similarity(self, a, b):
        for _, _, p, q, _, s in self.pairwise:
            if (p, q) == (a, b) or (p, q) == (b, a):
                return s
        if a == b:
            return Fraction(1)
        raise KeyError((a, b))


def _warn_degenerate(space):
    CbdtStatus.warn(
        "feature space {} is degenerate (every feature has one value); "
        "all similarities are 1".format(list(space.ids)),
        logger=_LOGGER,
    )


def similarity_table(space, query, problems, keys=None):
    """Similarity of query to each of problems, entries keyed by keys.

    keys defaults to problems; restricted decisions key projected
    problems by their original history problem.
    """
    query_ranks = _ranks(space, query, "query")
    distances = []
    for problem in problems:
        ranks = _ranks(space, problem, "history problem")
        distances.append(
            sum(abs(x - y) for x, y in zip(query_ranks, ranks))
        )
    d = diameter(space)
    if d == 0:
        _warn_degenerate(space)
    _LOGGER.debug(
        "similarity of {} over {} problems, diameter {}".format(
            query, len(distances), d
        )
    )
    return SimilarityTable(
        query, problems if keys is None else keys, distances, d
    )


def similarity(space, query, memory):
    # type: (FeatureSpace, Problem, object) -> SimilarityTable
    """s(query, q) = 1 - d(query, q) / D for every history problem q"""
    return similarity_table(space, query, memory.history())


def pairwise_similarity(space, memory, query=None):
    # type: (FeatureSpace, object, Optional[Problem]) -> DistanceReport
    """Distances and similarities of every pair of history problems"""
    problems = memory.history()
    ranks = [_ranks(space, p, "history problem") for p in problems]
    d = diameter(space)
    if d == 0:
        _warn_degenerate(space)
    pairwise = []
    for i, j in itertools.combinations(range(len(problems)), 2):
        distance = sum(abs(x - y) for x, y in zip(ranks[i], ranks[j]))
        s = Fraction(1) if d == 0 else 1 - Fraction(distance, d)
        pairwise.append((i, j, problems[i], problems[j], distance, s))
    query_distances = None
    if query is not None:
        query_distances = similarity_table(space, query, problems).distances
    return DistanceReport(
        pairwise, d, query_distances=query_distances, problems=problems
    )
