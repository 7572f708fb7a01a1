#pragma once

#include <stdexcept>
#include <string>

namespace latlevel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Poset construction
struct CycleError : Error {
    using Error::Error;
};
struct UnknownElement : Error {
    using Error::Error;
};

// Semilattice validation
struct EmptyInput : Error {
    using Error::Error;
};
struct NotMeetSemilattice : Error {
    using Error::Error;
};
struct NotIntersectionClosed : Error {
    using Error::Error;
};

// Dual ideal / level analysis
struct OverlapError : Error {
    using Error::Error;
};
struct NotMeetDistributive : Error {
    using Error::Error;
};
struct NotSimplicial : Error {
    using Error::Error;
};

// Resource bounds
struct TooLarge : Error {
    using Error::Error;
};

// CLI / corpus
struct UnknownName : Error {
    using Error::Error;
};
struct InvalidInput : Error {
    using Error::Error;
};

}  // namespace latlevel
