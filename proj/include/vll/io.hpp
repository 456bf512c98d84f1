// Text formats for identities, identity systems, Cayley tables and
// lattices. Parse errors are reported as ParseError with a 1-based line.

#ifndef VLL_IO_HPP_
#define VLL_IO_HPP_

#include <cstddef>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vll/deduction.hpp"
#include "vll/identity.hpp"
#include "vll/lattice.hpp"
#include "vll/semigroup.hpp"

namespace vll {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string const& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}

    std::size_t line;
  };

  //! One identity per line, "u = v" or "w = 0"; '#' starts a comment.
  std::vector<Identity> read_identities(std::istream& in);

  //! An optional "label: <text>" line followed by identities.
  IdentitySystem read_identity_system(std::istream& in);

  //! First line n, then n rows of n 0-based indices, then an optional
  //! "zero: k" line which must name the actual zero.
  FiniteSemigroup read_cayley_table(std::istream& in, std::string name = "");

  //! "n <size>" followed by cover lines "i < j".
  FiniteLattice read_lattice(std::istream& in);

  //! Opens a file, throwing std::runtime_error if it cannot be read.
  std::ifstream open_input(std::string const& path);

}  // namespace vll

#endif  // VLL_IO_HPP_
