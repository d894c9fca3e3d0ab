#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace treeqaoa {

using cplx = std::complex<double>;

/// Number of entries of a depth-p branch message, 4^p.
constexpr std::size_t message_entries(int p) noexcept {
    return std::size_t{1} << (2 * p);
}

/// Tensor over the parent's 2p trajectory bits.
///
/// Layout: ket bit of layer t (1-based) sits at bit position t-1 of the
/// flat index, the bra bit of layer t at position p+t-1.
class BranchMessage {
  public:
    BranchMessage() = default;
    /// All entries set to `fill`. Throws InvalidParameter for p < 1.
    explicit BranchMessage(int p, cplx fill = {0.0, 0.0});

    int depth() const noexcept { return p_; }
    std::size_t size() const noexcept { return data_.size(); }

    std::span<cplx> entries() noexcept { return data_; }
    std::span<const cplx> entries() const noexcept { return data_; }

    cplx &operator[](std::size_t i) noexcept { return data_[i]; }
    const cplx &operator[](std::size_t i) const noexcept { return data_[i]; }

    static constexpr std::size_t index(std::uint64_t ket_bits, std::uint64_t bra_bits,
                                       int p) noexcept {
        return static_cast<std::size_t>(ket_bits | (bra_bits << p));
    }

    bool all_finite() const noexcept;

  private:
    int p_ = 0;
    std::vector<cplx> data_;
};

/// Little-endian debug dump: u32 p, u32 d, u64 count, then count pairs of
/// f64 (real, imag).
void write_message(std::ostream &out, const BranchMessage &msg, int d);

struct MessageDump {
    int d = 0;
    BranchMessage message;
};

/// Throws ParseError on truncated input or an inconsistent header.
MessageDump read_message(std::istream &in);

} // namespace treeqaoa
