#pragma once

// Rendering of sweep results as text, JSON or CSV. Output depends only on the
// spec and the verdicts, plus a timestamp unless spec.timestamp is false.

#include <string>

#include "qcong/sweep.hpp"

namespace qcong {

std::string render_report(const SweepSpec &spec, const SweepResult &result);

// One line per verdict, witness fields appended; used by the text format.
std::string render_verdict_line(const Verdict &v, bool full_polys = false);

// Compact rendering of a verdict value: integers verbatim, polynomials as a
// digest "deg=..,low=..,content=..,at1=..,at2=.." or in full.
std::string render_value(const Value &v, bool full_polys = false);

} // namespace qcong
