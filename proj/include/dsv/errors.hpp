#pragma once

#include <stdexcept>
#include <string>

namespace dsv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeTooLarge : Error {
    using Error::Error;
};
struct NonPartitionContent : Error {
    using Error::Error;
};
struct SizeMismatch : Error {
    using Error::Error;
};
struct NotImplementedBasisPair : Error {
    using Error::Error;
};
struct InvalidInstance : Error {
    using Error::Error;
};
struct InvalidRow : Error {
    using Error::Error;
};
struct NotSchubertCompatible : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct ResourceLimit : Error {
    using Error::Error;
};
struct UnsupportedPrime : Error {
    using Error::Error;
};
struct NotContained : Error {
    using Error::Error;
};
struct NotContaining : Error {
    using Error::Error;
};
struct InvalidArguments : Error {
    using Error::Error;
};
struct NotFreePair : Error {
    using Error::Error;
};

// Enumeration guard. Work units are whatever the enumerator counts (cells,
// fillings, candidate subspaces); exceeding the limit raises ResourceLimit.
inline constexpr long long kDefaultBudget = 100'000'000;

} // namespace dsv
