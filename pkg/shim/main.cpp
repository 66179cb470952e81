// ccbench-libm-shim: external provider speaking the CCBENCH 1 protocol
// on stdin/stdout, answering with the host C++ runtime's complex math.
//
// The shim is a transparent subject under test: values cross the
// process boundary as IEEE bit patterns (memcpy, never printf of
// decimals), results are returned exactly as libm produced them, and
// no special case is ever "fixed up" here.
//
// Protocol:
//   HELLO                                   -> CCBENCH 1 SUBNORMALS yes|no
//                                              PRECISIONS binary32,binary64
//   EVAL <fn> <precision> <re_hex> <im_hex> -> OK <re_hex> <im_hex>
//                                            | UNSUPPORTED
//                                            | ERROR <message>
// Malformed requests get an ERROR reply and the loop continues; end of
// input exits 0.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

namespace {

template <typename Float, typename UInt>
Float from_bits(UInt bits) {
    static_assert(sizeof(Float) == sizeof(UInt), "width mismatch");
    Float v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

template <typename UInt, typename Float>
UInt to_bits(Float v) {
    static_assert(sizeof(Float) == sizeof(UInt), "width mismatch");
    UInt bits;
    std::memcpy(&bits, &v, sizeof bits);
    return bits;
}

bool parse_hex(const std::string& token, std::size_t digits, std::uint64_t& out) {
    if (token.size() != digits) return false;
    out = 0;
    for (char c : token) {
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else return false;  // uppercase is a protocol violation
        out = (out << 4) | static_cast<std::uint64_t>(nibble);
    }
    return true;
}

std::string hex_of(std::uint64_t bits, int digits) {
    char buf[17];
    std::snprintf(buf, sizeof buf, digits == 8 ? "%08llx" : "%016llx",
                  static_cast<unsigned long long>(bits));
    return std::string(buf);
}

template <typename T>
bool eval_fn(const std::string& fn, std::complex<T> z, std::complex<T>& out) {
    if (fn == "log") out = std::log(z);
    else if (fn == "sqrt") out = std::sqrt(z);
    else if (fn == "asin") out = std::asin(z);
    else if (fn == "acos") out = std::acos(z);
    else if (fn == "atan") out = std::atan(z);
    else if (fn == "asinh") out = std::asinh(z);
    else if (fn == "acosh") out = std::acosh(z);
    else if (fn == "atanh") out = std::atanh(z);
    else return false;
    return true;
}

bool subnormals_supported() {
    volatile double tiny = std::numeric_limits<double>::min();
    volatile double half = tiny / 2.0;
    return half != 0.0 && half < tiny;
}

void reply(const std::string& line) {
    std::cout << line << "\n" << std::flush;
}

void handle_eval(const std::string& fn, const std::string& precision,
                 const std::string& re_hex, const std::string& im_hex) {
    if (precision == "binary128") {
        reply("UNSUPPORTED");
        return;
    }
    if (precision == "binary64") {
        std::uint64_t re_bits, im_bits;
        if (!parse_hex(re_hex, 16, re_bits) || !parse_hex(im_hex, 16, im_bits)) {
            reply("ERROR bad hex pattern");
            return;
        }
        std::complex<double> z(from_bits<double>(re_bits), from_bits<double>(im_bits));
        std::complex<double> w;
        if (!eval_fn(fn, z, w)) {
            reply("ERROR unknown function " + fn);
            return;
        }
        reply("OK " + hex_of(to_bits<std::uint64_t>(w.real()), 16) + " " +
              hex_of(to_bits<std::uint64_t>(w.imag()), 16));
        return;
    }
    if (precision == "binary32") {
        std::uint64_t re_bits, im_bits;
        if (!parse_hex(re_hex, 8, re_bits) || !parse_hex(im_hex, 8, im_bits)) {
            reply("ERROR bad hex pattern");
            return;
        }
        std::complex<float> z(from_bits<float>(static_cast<std::uint32_t>(re_bits)),
                              from_bits<float>(static_cast<std::uint32_t>(im_bits)));
        std::complex<float> w;
        if (!eval_fn(fn, z, w)) {
            reply("ERROR unknown function " + fn);
            return;
        }
        reply("OK " + hex_of(to_bits<std::uint32_t>(w.real()), 8) + " " +
              hex_of(to_bits<std::uint32_t>(w.imag()), 8));
        return;
    }
    reply("ERROR unknown precision " + precision);
}

}  // namespace

int main() {
    std::ios::sync_with_stdio(false);
    std::string line;
    const std::string greeting =
        std::string("CCBENCH 1 SUBNORMALS ") +
        (subnormals_supported() ? "yes" : "no") +
        " PRECISIONS binary32,binary64";
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line == "HELLO") {
            reply(greeting);
            continue;
        }
        std::istringstream words(line);
        std::string verb, fn, precision, re_hex, im_hex, extra;
        words >> verb >> fn >> precision >> re_hex >> im_hex;
        if (verb != "EVAL" || im_hex.empty() || (words >> extra)) {
            reply("ERROR malformed request");
            continue;
        }
        handle_eval(fn, precision, re_hex, im_hex);
    }
    return 0;
}
