#pragma once

#include <stdexcept>
#include <string>

namespace qlambert
{

// Base class for every error raised by the library.
class series_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Constant term of a series to be inverted is not +1 or -1.
class not_a_unit : public series_error
{
public:
    using series_error::series_error;
};

// A requested comparison or check order exceeds what is available (or is below the minimum).
class order_too_small : public series_error
{
public:
    using series_error::series_error;
};

class invalid_exponent : public series_error
{
public:
    using series_error::series_error;
};

// A lambert_spec whose terms would have a non-positive denominator exponent
// or a non-increasing numerator exponent.
class divergent_spec : public series_error
{
public:
    using series_error::series_error;
};

// A Pochhammer factor degenerates to 1 - 1 = 0.
class zero_factor : public series_error
{
public:
    using series_error::series_error;
};

class parameter_out_of_range : public series_error
{
public:
    using series_error::series_error;
};

class unsupported_series : public series_error
{
public:
    using series_error::series_error;
};

class no_consistent_sign : public series_error
{
public:
    using series_error::series_error;
};

} // namespace qlambert
