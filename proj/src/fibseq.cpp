#include "sqtile/fibseq.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sqtile {

namespace {

void validate_seq(const FibSeq& seq) {
    if (seq.seed1 < 1 || seq.seed2 < 1) {
        throw std::invalid_argument("sequence seeds must be positive");
    }
    if (seq.scale < 1) {
        throw std::invalid_argument("sequence scale must be positive");
    }
    for (Int p : seq.prefix) {
        if (p < 1) {
            throw std::invalid_argument("sequence prefix terms must be positive");
        }
    }
}

}  // namespace

std::vector<Int> terms(const FibSeq& seq, std::size_t n) {
    validate_seq(seq);
    std::vector<Int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < seq.prefix.size() && out.size() < n; ++i) {
        out.push_back(checked_mul(seq.prefix[i], seq.scale));
    }
    if (out.size() < n) {
        out.push_back(checked_mul(seq.seed1, seq.scale));
    }
    if (out.size() < n) {
        out.push_back(checked_mul(seq.seed2, seq.scale));
    }
    while (out.size() < n) {
        out.push_back(checked_add(out[out.size() - 1], out[out.size() - 2]));
    }
    return out;
}

Int term_at(const FibSeq& seq, std::size_t index) {
    return terms(seq, index + 1).back();
}

FibSeq scale_seq(const FibSeq& seq, Int k) {
    if (k < 1) {
        throw std::invalid_argument("scale factor must be positive");
    }
    FibSeq scaled = seq;
    scaled.scale = checked_mul(seq.scale, k);
    return scaled;
}

const std::vector<Int>& base_prefix() {
    static const std::vector<Int> prefix{2, 8, 14, 16, 18, 20, 28, 30, 36};
    return prefix;
}

FibSeq seq_a() { return FibSeq{64, 130, 1, base_prefix()}; }

FibSeq seq_b() { return FibSeq{14, 20, 1, {}}; }

FibSeq seq_c() { return FibSeq{16, 24, 1, {}}; }

namespace {

class SpecParser {
  public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    FibSeq parse() {
        skip_ws();
        Int scale = 1;
        // Optional "K*" multiplier.
        std::size_t save = pos_;
        if (std::isdigit(peek())) {
            Int value = parse_int();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                scale = value;
                skip_ws();
            } else {
                pos_ = save;
            }
        }
        FibSeq seq = parse_body();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return scale_seq(seq, scale);
    }

  private:
    FibSeq parse_body() {
        if (try_consume("fib")) {
            return parse_fib();
        }
        if (try_consume("A")) {
            return seq_a();
        }
        if (try_consume("B")) {
            return seq_b();
        }
        if (try_consume("C")) {
            return seq_c();
        }
        fail("expected fib(...) or one of A, B, C");
    }

    FibSeq parse_fib() {
        skip_ws();
        expect('(');
        FibSeq seq;
        seq.seed1 = parse_int();
        skip_ws();
        expect(',');
        seq.seed2 = parse_int();
        skip_ws();
        if (peek() == ';') {
            ++pos_;
            skip_ws();
            if (!try_consume("prefix")) {
                fail("expected prefix=");
            }
            skip_ws();
            expect('=');
            seq.prefix.push_back(parse_int());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                seq.prefix.push_back(parse_int());
                skip_ws();
            }
        }
        expect(')');
        return seq;
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        Int value = 0;
        auto sub = text_.substr(start, pos_ - start);
        auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), value);
        if (ec != std::errc{} || ptr != sub.data() + sub.size()) {
            fail("integer out of range");
        }
        return value;
    }

    bool try_consume(std::string_view word) {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& why) {
        std::ostringstream msg;
        msg << "bad sequence spec at offset " << pos_ << ": " << why;
        throw std::invalid_argument(msg.str());
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FibSeq parse_seq_spec(std::string_view spec) {
    FibSeq seq = SpecParser(spec).parse();
    validate_seq(seq);
    return seq;
}

std::string seq_spec_string(const FibSeq& seq) {
    std::ostringstream out;
    if (seq.scale != 1) {
        out << seq.scale << "*";
    }
    out << "fib(" << seq.seed1 << "," << seq.seed2;
    if (!seq.prefix.empty()) {
        out << ";prefix=";
        for (std::size_t i = 0; i < seq.prefix.size(); ++i) {
            if (i > 0) {
                out << ",";
            }
            out << seq.prefix[i];
        }
    }
    out << ")";
    return out.str();
}

}  // namespace sqtile
