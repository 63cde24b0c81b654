#pragma once

/**
 * @file formats.hpp
 * @brief Line-oriented text formats: poset files, hypermatrix files, FMap
 *        table files, grounded-function files, and CLI subset lists.
 *
 * All writers emit canonical, byte-stable text; all parsers throw ParseError
 * with a 1-based line number. Blank lines and `#` comments are ignored.
 */

#include <cstdint>
#include <functional>
#include <istream>
#include <string>

#include "meetdet/closedform.hpp"
#include "meetdet/numth.hpp"

namespace meetdet {

Poset parse_poset(std::istream& in);
Poset load_poset_file(const std::string& path);
std::string poset_text(const Poset& p);

Hypermatrix parse_hypermatrix(std::istream& in);
Hypermatrix load_hypermatrix_file(const std::string& path);
std::string hypermatrix_text(const Hypermatrix& m);

/// Table lines `<perm>;<perm>;... -> <scalar>` plus one `default -> <scalar>`.
/// arity/n are the required shape (from the hypermatrix the map is for).
FMap parse_fmap_table(std::istream& in, int arity, int n);
FMap load_fmap_table_file(const std::string& path, int arity, int n);
std::string fmap_table_text(const FMap& f);

/// Grounded-function file: `gf <poset-file> <n>` header, one `z <x> <z>` line
/// per index-set member (in order), `F <x> <z> <scalar>` value lines, and an
/// optional `symbolic` directive filling every unset F_x(z), z <= x, with the
/// indeterminate F<x>(<z>). The poset path resolves relative to the gf file.
GroundedFunction parse_gf(std::istream& in,
                          const std::function<Poset(const std::string&)>& load_poset);
GroundedFunction load_gf_file(const std::string& path);
std::string gf_text(const GroundedFunction& gf, const std::string& poset_ref);

/// Comma-separated element labels or indices.
std::vector<int> parse_subset(const Poset& p, const std::string& csv);

/// FNV-1a of the canonical text; the digest printed by the CLI.
std::uint64_t fnv1a64(std::string_view text);
std::string digest_hex(std::string_view text);

} // namespace meetdet
