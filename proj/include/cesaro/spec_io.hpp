#ifndef CESARO_SPEC_IO_HPP
#define CESARO_SPEC_IO_HPP

#include "cesaro/evaluable.hpp"
#include "cesaro/series.hpp"
#include "cesaro/testfns.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cesaro
{

// Thrown for malformed JSON text or a spec that does not match the schema.
class SpecError : public Error
{
public:
    using Error::Error;
};

using FunctionSpec = std::variant<TruncatedSeries, CompositeRadial>;

// {"kind":"series","dim":n,"cap":N,"terms":[[[i1,...,in], re, im], ...]}
// {"kind":"h_a"|"f_a"|"f_k"|"log_kernel","a":[[re,im], ...]}
FunctionSpec parse_function_spec(const nlohmann::json &j);
FunctionSpec parse_function_spec_text(std::string_view text);

TruncatedSeries parse_series(const nlohmann::json &j);
nlohmann::ordered_json series_to_json(const TruncatedSeries &s);

// Complex numbers travel as [re, im]; plain numbers are accepted as reals.
cplx parse_complex(const nlohmann::json &j);
Vector parse_complex_list(const nlohmann::json &j);
nlohmann::ordered_json complex_to_json(cplx c);

Evaluable to_evaluable(const FunctionSpec &spec);
std::size_t spec_dim(const FunctionSpec &spec);

// All multi-indices of length n with |alpha| <= degree, in graded order.
std::vector<MultiIndex> multi_indices(std::size_t n, int degree);

// Dense polynomial with coefficients uniform in the unit square.
TruncatedSeries random_polynomial(std::size_t n, int degree, std::uint64_t seed, int cap = -1);

// Named symbols: "one", "zero", "z<j>" (1-based coordinate), "log-kernel"
// (anchored at e_1), "random-poly(seed,deg)", "log-series(N)" (log 1/(1-z_1)
// truncated at degree N).
FunctionSpec preset(std::string_view name, std::size_t n, int cap);

} // namespace cesaro

#endif
