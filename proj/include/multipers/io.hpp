#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "multipers/blocks.hpp"
#include "multipers/fibered.hpp"
#include "multipers/functors.hpp"
#include "multipers/presentation.hpp"
#include "multipers/witness.hpp"

namespace multipers {

// Text formats are line oriented; '#' starts a comment and blank lines are ignored.
// Rationals are written as num/den and read as num/den or integers.

/// fpres 1 / field p / params n / generators k / g label r1..rn / relations m / r r1..rn ; c:idx ...
presentation read_fpres(std::istream& in);
void write_fpres(std::ostream& out, const presentation& p);

/// bar birth death|inf multiplicity, sorted.
barcode read_barcode(std::istream& in);
void write_barcode(std::ostream& out, const barcode& b);

/// blocks 1 / blk kind a b.
std::vector<block> read_blocks(std::istream& in);
void write_blocks(std::ostream& out, const std::vector<block>& blocks);

/// witness eps / f i -> c:j ... / g j -> c:i ...; missing lines are zero images.
interleaving_witness read_witness(std::istream& in, std::size_t p_generators, std::size_t q_generators,
                                  const prime_field& field);
void write_witness(std::ostream& out, const interleaving_witness& w);

/// joint 1 / epsilon e / two fpres blocks whose columns index the combined generator list.
joint_presentation read_joint(std::istream& in);
void write_joint(std::ostream& out, const joint_presentation& j);

presentation read_fpres_file(const std::string& path);
std::string to_fpres(const presentation& p);

}  // namespace multipers
