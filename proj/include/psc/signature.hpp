#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psc {

// The generator alphabet of an algebra: an ordered list of distinct
// variable names, each optionally marked invertible (Laurent variable).
class Signature {
public:
    // Validates: nonempty, unique, identifier grammar
    // (letter followed by letters/digits/underscore).
    Signature(std::vector<std::string> names, std::vector<bool> invertible);

    // Convenience: no invertible variables.
    static std::shared_ptr<const Signature> polynomial(std::vector<std::string> names);
    static std::shared_ptr<const Signature> make(std::vector<std::string> names,
                                                 std::vector<bool> invertible);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    bool invertible(std::size_t i) const { return invertible_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.names_ == b.names_ && a.invertible_ == b.invertible_;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> invertible_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

bool is_valid_identifier(std::string_view text);

// Throws std::invalid_argument unless both values carry equal signatures.
void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, const char* op);

}  // namespace psc
