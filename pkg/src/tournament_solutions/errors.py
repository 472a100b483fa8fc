"""Exception hierarchy shared by all modules."""


class TournamentError(ValueError):
    """Base class for every error raised by this package."""


class MalformedInput(TournamentError):
    pass


class NotATournament(TournamentError):
    pass


class EmptyTournament(TournamentError):
    pass


class AlternativeOutOfRange(TournamentError):
    pass


class ArityMismatch(TournamentError):
    pass


class EmptySet(TournamentError):
    pass


class EmptyUniverse(TournamentError):
    pass


class OrderTooLarge(TournamentError):
    pass


class OrderTooLargeForExact(OrderTooLarge):
    """A brute-force solver was asked to handle more alternatives than its cap."""

    def __init__(self, solver, order, cap):
        self.solver = solver
        self.order = order
        self.cap = cap
        super().__init__(f"{solver}: order {order} exceeds exact-solver cap {cap}")


class EvenElectorate(TournamentError):
    pass


class InconsistentAlternativeSets(TournamentError):
    pass


class NotRegular(TournamentError):
    pass


class NotAProduct(TournamentError):
    pass


class DimensionMismatch(TournamentError):
    pass


class Infeasible(TournamentError):
    pass
