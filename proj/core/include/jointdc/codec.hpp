#pragma once

#include <cstdint>
#include <vector>

#include "jointdc/pmf.hpp"
#include "jointdc/region.hpp"
#include "jointdc/type_composition.hpp"

namespace jointdc {

// Big-endian packed bitstring: bit i of the stream is bit (7 - i%8) of
// bytes[i/8]. Header-free; (n, alphabet_size) travel out of band.
struct Bitstring {
    std::vector<std::uint8_t> bytes;
    std::size_t bit_count = 0;

    bool bit(std::size_t i) const {
        return (bytes[i / 8] >> (7 - i % 8)) & 1u;
    }
};

// Real-valued (nats) or integer-bit code lengths, for Kraft verification.
struct CodeLengths {
    std::vector<double> lengths;
    bool integer_bits = false;  // when true, lengths are bits and the sum uses base 2
};

struct KraftResult {
    double sum = 0.0;
    bool ok = false;
};

// Kraft sum: sum 2^-L (integer bits) or sum e^-L (nats), with a 1e-9
// tolerance for real-valued lengths.
KraftResult kraft_check(const CodeLengths& lengths);

// Ideal conditional length -ln[ p1(x)^{1/(1+theta)} / sum_{x' in region} ... ]
// for a sequence of type t, computed exactly in log domain by type sums.
// Throws when t is not accepted by the region.
double l_star_length(const TypeComposition& t, const Region& region,
                     const Pmf& p1, double theta);

// Two-part universal code: the lexicographic index of the type in
// ceil(log2 T_n) bits, then the enumerative rank of the sequence within its
// type class in ceil(log2 |T|) bits. Exact big-integer combinatorics.
Bitstring two_part_encode(const std::vector<int>& x, std::size_t alphabet_size);
std::vector<int> two_part_decode(const Bitstring& bits, int n,
                                 std::size_t alphabet_size);

// Bit length of the two-part code for a sequence of this type.
std::size_t two_part_bit_length(const TypeComposition& t);

struct ExpMoment {
    double log_value = 0.0;  // nats
    bool with_l_star = false;
};

// Exact exponential moment over the region by type sums in log domain.
// with_l_star=true: ln E_p[exp(theta L*) | region] including the exact
// conditioning factor p(region). with_l_star=false: the universal-code
// analogue ln sum_{region} p(x) exp(n theta H_x).
ExpMoment exp_moment_exact(const Region& region, const Pmf& p, double theta,
                           bool with_l_star);

}  // namespace jointdc
