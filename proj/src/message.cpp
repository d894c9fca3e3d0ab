#include "treeqaoa/message.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

namespace {

constexpr int kMaxDumpDepth = 20;

template <typename U> void put_le(std::ostream &out, U value) {
    std::array<char, sizeof(U)> bytes{};
    for (std::size_t i = 0; i < sizeof(U); ++i)
        bytes[i] = static_cast<char>((value >> (8 * i)) & 0xffu);
    out.write(bytes.data(), bytes.size());
}

template <typename U> U get_le(std::istream &in, const char *field) {
    std::array<unsigned char, sizeof(U)> bytes{};
    in.read(reinterpret_cast<char *>(bytes.data()), bytes.size());
    if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
        throw ParseError(0, std::string("message dump truncated while reading ") + field);
    U value = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i)
        value |= static_cast<U>(bytes[i]) << (8 * i);
    return value;
}

} // namespace

BranchMessage::BranchMessage(int p, cplx fill) : p_(p) {
    if (p < 1)
        throw InvalidParameter("message depth must be >= 1, got " + std::to_string(p));
    if (p > 30)
        throw ResourceError("message depth " + std::to_string(p) + " is not addressable");
    data_.assign(message_entries(p), fill);
}

bool BranchMessage::all_finite() const noexcept {
    for (const auto &z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

void write_message(std::ostream &out, const BranchMessage &msg, int d) {
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(msg.depth()));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(d));
    put_le<std::uint64_t>(out, msg.size());
    for (const auto &z : msg.entries()) {
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(z.real()));
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(z.imag()));
    }
}

MessageDump read_message(std::istream &in) {
    const auto p = get_le<std::uint32_t>(in, "p");
    const auto d = get_le<std::uint32_t>(in, "d");
    const auto count = get_le<std::uint64_t>(in, "count");
    if (p < 1 || p > kMaxDumpDepth)
        throw ParseError(0, "message dump has unsupported depth " + std::to_string(p));
    if (count != message_entries(static_cast<int>(p)))
        throw ParseError(0, "message dump count " + std::to_string(count) +
                                " does not equal 4^" + std::to_string(p));
    MessageDump dump{static_cast<int>(d), BranchMessage(static_cast<int>(p))};
    for (auto &z : dump.message.entries()) {
        const double re = std::bit_cast<double>(get_le<std::uint64_t>(in, "entry"));
        const double im = std::bit_cast<double>(get_le<std::uint64_t>(in, "entry"));
        z = {re, im};
    }
    return dump;
}

} // namespace treeqaoa
