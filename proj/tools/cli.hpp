#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarq {

enum ExitCode : int {
  kExitOk = 0,
  kExitDecodeFailure = 1,
  kExitUsage = 2,
};

/// Runs one polarq invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Payload or codeword bits as MSB-first hexadecimal, zero-padded on the right.
std::string bits_to_hex(const std::vector<unsigned char>& bits);
/// Inverse of bits_to_hex for a frame of `length` bits; throws on a bad
/// digit count, a non-hex digit or non-zero padding.
std::vector<unsigned char> hex_to_bits(const std::string& hex, std::size_t length);

}  // namespace polarq
