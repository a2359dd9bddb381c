#ifndef SGT_TOOLS_VERIFY_DOCUMENT_HPP
#define SGT_TOOLS_VERIFY_DOCUMENT_HPP

#include <string>
#include <vector>

#include "sgt/io.hpp"

namespace sgt::tools {

struct VerifyOutcome {
    bool ok = false;
    std::string reason;
};

/// Re-verifies a machine-format result document against the input files the
/// original subcommand was given (graphs, and a walk list for walkcheck).
VerifyOutcome verify_document(const ResultDocument& doc, const std::vector<std::string>& inputs);

}  // namespace sgt::tools

#endif
