#ifndef WFADIS_TEXT_FORMAT_HPP_
#define WFADIS_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "wfadis/wfa.hpp"

namespace wfadis {

// Line-oriented text format:
//
//   wfa v1 tropical            # header, required first
//   states 6                   # optional; only needed for unused trailing ids
//   sigma a b c                # optional; pins the alphabet
//   initial 0 0                # state [weight], weight defaults to one
//   final 3 1/2
//   trans 0 1 a 3              # src dst label [weight]
//
// '#' starts a comment. Weights are integers, p/q rationals or "inf".
// Throws ParseError with the offending line number.
Wfa ParseWfa(std::string_view text);
Wfa ReadWfaFile(const std::string &path);

// Canonical serialization: header, optional states line, sigma, initial
// lines, final lines, then transitions in canonical order. Two automata are
// isomorphic under the identity map iff their serializations are equal.
std::string SerializeWfa(const Wfa &a);
void WriteWfaFile(const Wfa &a, const std::string &path);

}  // namespace wfadis

#endif  // WFADIS_TEXT_FORMAT_HPP_
