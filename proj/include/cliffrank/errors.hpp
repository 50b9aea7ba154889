#pragma once

#include <stdexcept>
#include <string>

namespace cliffrank {

// An exhaustive sweep would exceed its blade-pair budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or invalid multivector document.
class document_error : public std::runtime_error {
public:
    explicit document_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cliffrank
