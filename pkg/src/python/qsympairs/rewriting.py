"""
    Homogeneous noncommutative rewriting for the quantum Serre ideal.

    Words are tuples of generator indices. Linear combinations of words are
    dictionaries ``{word: coefficient}``. Rules are monic: the leading word
    (the largest word under degree-lexicographic order) rewrites to a
    combination of strictly smaller words of the same weight. Completion runs
    one degree at a time, resolving every overlap ambiguity of that degree
    before the next, so the recorded status is exact for each degree reached.
"""
import operator
from dataclasses import dataclass

from cachetools import LRUCache, cachedmethod
from cachetools.keys import hashkey

from qsympairs import constants
from qsympairs.errors import ResourceError
from qsympairs.logging import LOGGER
from qsympairs.qfield import ONE, qbinom


def word_key(word):
    """ Returns the sort key of degree-lexicographic order. """
    return len(word), word


def leading_word(combination):
    return max(combination, key=word_key)


def add_into(target, combination, scalar=ONE):
    """ Adds scalar * combination into target, dropping zero coefficients. """
    for word, coefficient in combination.items():
        value = target.get(word, 0) + scalar * coefficient
        if value:
            target[word] = value
        else:
            target.pop(word, None)
    return target


def serre_relation(i, j, cartan, d_i):
    """ Returns the quantum Serre relation
        sum_m (-1)^m [1-a_ij choose m]_{q_i} z_i^{1-a_ij-m} z_j z_i^m
        as a combination of words.
    """
    order = 1 - cartan[i][j]
    relation = {}
    for m in range(order + 1):
        word = (i,) * (order - m) + (j,) + (i,) * m
        coefficient = qbinom(order, m, d_i)
        relation[word] = coefficient if m % 2 == 0 else -coefficient
    return relation


@dataclass(frozen=True)
class ConfluenceStatus:
    degree: int
    overlaps: int
    resolved: int
    rules_added: int


class RewriteSystem:
    """ A completed rewriting system for the quantum Serre relations of a
        root datum, valid for words of length at most ``degree_bound``.

    Args:
        datum (RootDatum): The root datum supplying a_ij and d_i.
        degree_bound (int): The completion degree D.
        rule_budget (int): Maximum number of rules.
        step_budget (int): Maximum number of rewriting steps in one reduction.
    """

    def __init__(self, datum, degree_bound=constants.DEFAULT_DEGREE_BOUND,
                 rule_budget=constants.DEFAULT_RULE_BUDGET,
                 step_budget=constants.DEFAULT_STEP_BUDGET):
        self.datum = datum
        self.alphabet = tuple(range(datum.rank))
        self.degree_bound = degree_bound
        self.rule_budget = rule_budget
        self.step_budget = step_budget
        self.rules = {}
        self.status = []
        self._lengths = ()
        self._word_cache = LRUCache(maxsize=200_000)
        self.complete()

    # ----------- RELATIONS ----------
    def relations(self):
        """ Returns the Serre relations grouped by degree. """
        grouped = {}
        cartan = self.datum.cartan
        for i in self.alphabet:
            for j in self.alphabet:
                if i == j:
                    continue
                relation = serre_relation(i, j, cartan, self.datum.d(i))
                degree = 2 - cartan[i][j]
                grouped.setdefault(degree, []).append(relation)
        return grouped

    def overlaps(self, degree):
        """ Returns the ambiguities of the given total length as
            (left rule, right rule, overlap length) triples.
        """
        found = []
        for left in self.rules:
            for right in self.rules:
                for k in range(1, min(len(left), len(right))):
                    if len(left) + len(right) - k != degree:
                        continue
                    if left[len(left) - k:] == right[:k]:
                        found.append((left, right, k))
        return found

    def overlap_difference(self, left, right, k):
        """ Returns the difference of the two one-step reductions of the
            overlap word left + right[k:].
        """
        difference = {}
        suffix, prefix = right[k:], left[:len(left) - k]
        add_into(difference, {w + suffix: c for w, c in self.rules[left].items()})
        add_into(difference, {prefix + w: c for w, c in self.rules[right].items()}, -ONE)
        return difference

    # ----------- COMPLETION ----------
    def complete(self):
        """ Completes the relations degree by degree up to the degree bound.

        Raises:
            ResourceError: If the rule budget is exceeded.
        """
        relations = self.relations()
        for degree in range(2, self.degree_bound + 1):
            pending = [
                self.overlap_difference(*overlap) for overlap in self.overlaps(degree)
            ]
            overlap_count = len(pending)
            pending.extend(relations.get(degree, []))
            added = resolved = 0
            for index, candidate in enumerate(pending):
                remainder = self.reduce(candidate)
                if not remainder:
                    if index < overlap_count:
                        resolved += 1
                    continue
                self._add_rule(remainder, degree)
                added += 1
            if added:
                self._interreduce(degree)
            self.status.append(ConfluenceStatus(degree, overlap_count, resolved, added))
            LOGGER.debug(
                f"Degree {degree}: {overlap_count} overlaps, {resolved} resolved, "
                f"{added} rules added"
            )
        LOGGER.info(
            f"Rewriting system for {self.datum.label} complete to degree "
            f"{self.degree_bound}: {len(self.rules)} rules"
        )

    def _add_rule(self, combination, degree):
        lead = leading_word(combination)
        scale = -ONE / combination[lead]
        rhs = {w: c * scale for w, c in combination.items() if w != lead}
        self.rules[lead] = rhs
        self._lengths = tuple(sorted({len(w) for w in self.rules}))
        self._word_cache.clear()
        if len(self.rules) > self.rule_budget:
            raise ResourceError(
                f"Rewriting exceeded the rule budget of {self.rule_budget}",
                degree=degree,
            )

    def _interreduce(self, degree):
        for lhs in [w for w in self.rules if len(w) == degree]:
            self.rules[lhs] = self.reduce(self.rules[lhs])
        self._word_cache.clear()

    def verify_confluence(self):
        """ Returns the overlaps (up to the degree bound) whose two
            reductions do not agree. An empty list proves local confluence,
            hence unique normal forms, for words of length at most D.
        """
        failures = []
        for degree in range(3, self.degree_bound + 1):
            for overlap in self.overlaps(degree):
                if self.reduce(self.overlap_difference(*overlap)):
                    failures.append(overlap)
        return failures

    # ----------- REDUCTION ----------
    def find_match(self, word):
        """ Returns (position, lhs) of the leftmost rule occurrence, or None. """
        for position in range(len(word)):
            for length in self._lengths:
                factor = word[position:position + length]
                if len(factor) == length and factor in self.rules:
                    return position, factor
        return None

    def is_irreducible(self, word):
        return self.find_match(word) is None

    @cachedmethod(operator.attrgetter("_word_cache"))
    def normal_word(self, word):
        """ Returns the normal form of a single word.

        Args:
            word (Tuple[int]): A word in the generator alphabet.
        Returns:
            Dict[Tuple[int], FracElement]: A combination of irreducible words.
        Raises:
            ResourceError: If the word is longer than the degree bound or the
                step budget is exhausted.
        """
        if len(word) > self.degree_bound:
            raise ResourceError(
                f"Word of degree {len(word)} exceeds the degree bound "
                f"{self.degree_bound}",
                degree=len(word),
            )
        result, todo, steps = {}, {word: ONE}, 0
        while todo:
            current = leading_word(todo)
            coefficient = todo.pop(current)
            known = self._word_cache.get(hashkey(current)) if current != word else None
            if known is not None:
                add_into(result, known, coefficient)
                continue
            match = self.find_match(current)
            if match is None:
                add_into(result, {current: ONE}, coefficient)
                continue
            steps += 1
            if steps > self.step_budget:
                raise ResourceError(
                    f"Reduction exceeded the step budget of {self.step_budget}",
                    degree=len(word),
                )
            position, lhs = match
            prefix, suffix = current[:position], current[position + len(lhs):]
            add_into(
                todo,
                {prefix + w + suffix: c for w, c in self.rules[lhs].items()},
                coefficient,
            )
        return result

    def reduce(self, combination):
        """ Returns the normal form of a combination of words. """
        result = {}
        for word, coefficient in combination.items():
            add_into(result, self.normal_word(word), coefficient)
        return result

    # ----------- NORMAL WORDS ----------
    def irreducible_words(self, weight):
        """ Returns all irreducible words of the given weight, in increasing
            degree-lexicographic order.

        Args:
            weight (Tuple[int]): Letter multiplicities per generator.
        Returns:
            List[Tuple[int]]: The irreducible words.
        """
        weight = tuple(weight)
        if sum(weight) > self.degree_bound:
            raise ResourceError(
                f"Weight of height {sum(weight)} exceeds the degree bound",
                degree=sum(weight),
            )
        found = []

        def extend(prefix, remaining):
            if not any(remaining):
                found.append(prefix)
                return
            for letter in self.alphabet:
                if not remaining[letter]:
                    continue
                word = prefix + (letter,)
                if any(word[len(word) - length:] in self.rules
                       for length in self._lengths if length <= len(word)):
                    continue
                left = tuple(c - 1 if k == letter else c for k, c in enumerate(remaining))
                extend(word, left)

        extend((), weight)
        return sorted(found, key=word_key)

    def summary(self):
        return {
            "degree_bound": self.degree_bound,
            "rules": len(self.rules),
            "rules_per_degree": {
                status.degree: status.rules_added for status in self.status
                if status.rules_added
            },
            "overlaps_checked": sum(status.overlaps for status in self.status),
        }
