#pragma once

#include <stdexcept>
#include <string>

namespace triortho {

// Module errors carry a stable kind tag so the CLI can map them to
// machine-readable payloads without string matching on messages.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

#define TRIORTHO_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                            \
      public:                                                              \
        explicit NAME(const std::string& message) : Error(#NAME, message) {} \
    }

TRIORTHO_DEFINE_ERROR(ParseError);
TRIORTHO_DEFINE_ERROR(SubspaceViolation);
TRIORTHO_DEFINE_ERROR(NoExtension);
TRIORTHO_DEFINE_ERROR(NotTriorthogonal);
TRIORTHO_DEFINE_ERROR(RankDeficient);
TRIORTHO_DEFINE_ERROR(OddDeficiency);
TRIORTHO_DEFINE_ERROR(TooLarge);
TRIORTHO_DEFINE_ERROR(DimensionMismatch);
TRIORTHO_DEFINE_ERROR(InvalidLabel);
TRIORTHO_DEFINE_ERROR(IndexOutOfRange);
TRIORTHO_DEFINE_ERROR(ForcedContradiction);
TRIORTHO_DEFINE_ERROR(UndecodableSyndrome);
TRIORTHO_DEFINE_ERROR(PairNotTransversal);
TRIORTHO_DEFINE_ERROR(UnsupportedKind);
TRIORTHO_DEFINE_ERROR(MalformedCondition);

#undef TRIORTHO_DEFINE_ERROR

}  // namespace triortho
