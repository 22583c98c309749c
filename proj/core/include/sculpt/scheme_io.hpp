#pragma once

#include <string>

#include "sculpt/graph.hpp"

namespace sculpt {

/// Canonical textual scheme format (JSON):
///
///   {
///     "version": 1,
///     "modes": [ {"label": "1", "kind": "qubit"}, ... ],
///     "edges": [ {"source": "2", "target": "1", "state": "0",
///                 "amplitude": {"p": "1", "q": "0", "r": "0", "s": "0"}}, ... ]
///   }
///
/// Amplitude components are "num/den" (or plain "num") rational strings for
/// (p + q*sqrt2) + i*(r + s*sqrt2). Modes are sorted by label; edges are
/// sorted by (target, source, state). write(read(text)) == text for any
/// canonical document, and write is canonical by construction.
std::string write_scheme(const SculptingDigraph& g);

/// Throws std::invalid_argument on malformed documents: bad JSON, unknown
/// fields of the wrong type, unsupported version, duplicate labels, edges
/// whose endpoints are not modes, non-canonical state symbols, malformed or
/// zero amplitudes.
SculptingDigraph read_scheme(const std::string& text);

/// File variants. Throw std::runtime_error when the file cannot be opened.
void save_scheme(const SculptingDigraph& g, const std::string& path);
SculptingDigraph load_scheme(const std::string& path);

}  // namespace sculpt
