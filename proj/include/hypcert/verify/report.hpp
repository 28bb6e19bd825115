#pragma once

// Structured outcome record for a single verification instance. One report
// per (check id, parameter instance); the CLI renders vectors of these as
// JSON, CSV, or aligned text.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

namespace hypcert::verify {

enum class Verdict { Pass, Fail, Skip };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skip";
    }
}

struct CongruenceReport {
    std::string check_id;
    uint64_t p = 0;
    uint32_t l = 1;
    std::optional<std::string> j0;
    std::optional<std::string> z0;
    std::optional<std::string> branch; // "split" or "inert"
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::Skip;
    std::optional<std::string> skip_reason;
    int64_t ms = 0;
    // Free-form annotation (shown in human output only; the machine formats
    // keep a fixed column set).
    std::string note;
};

inline CongruenceReport skip_report(std::string check_id, uint64_t p, uint32_t l,
                                    std::string reason) {
    CongruenceReport r;
    r.check_id = std::move(check_id);
    r.p = p;
    r.l = l;
    r.verdict = Verdict::Skip;
    r.skip_reason = std::move(reason);
    return r;
}

// FNV-1a folding of 64-bit words; used to digest long value sequences
// (polynomial coefficients, per-index residues) into a short stable string
// for the lhs/rhs columns.
class SequenceDigest {
  public:
    void add(uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h_ ^= (x >> (8 * i)) & 0xff;
            h_ *= 0x100000001b3ull;
        }
        ++count_;
    }

    std::string str() const {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "seq%zu#%016llx", count_,
                      static_cast<unsigned long long>(h_));
        return std::string(buf);
    }

  private:
    uint64_t h_ = 0xcbf29ce484222325ull;
    size_t count_ = 0;
};

} // namespace hypcert::verify
