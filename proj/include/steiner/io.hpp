#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/invariants.hpp"
#include "steiner/porism.hpp"
#include "steiner/tolerance.hpp"

namespace steiner {

// Shortest decimal that parses back to the same double.
std::string format_number(double value);

// Thrown when a chain document parses but its circles are not a Steiner
// chain of the stated gauge.
class ChainValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"gauge": {"n", "R", "r", "d"}, "phase": ..., "circles": [{"x", "y", "radius"}, ...]}
std::string chain_to_json(const SteinerChain& chain, int indent = 2);

// Throws InvalidInput on malformed documents and ChainValidationError when
// the gauge or the tangency residuals fail revalidation.
SteinerChain chain_from_json(std::string_view text, Tolerance tol = {});

SteinerChain read_chain_file(const std::string& path, Tolerance tol = {});
void write_text_file(const std::string& path, std::string_view contents);

// phase,I1,...,I{n}, then ReJ{k}_{m},ImJ{k}_{m} for 0 <= m <= k <= n-1,
// k ascending, then m ascending.
std::string sweep_csv_header(int n);
void write_sweep_csv(std::ostream& os, int n, const std::vector<SweepSample>& rows);

// Outer parent, inner parent and the chain circles as stroked circles.
std::string render_svg(const SteinerChain& chain);

}  // namespace steiner
