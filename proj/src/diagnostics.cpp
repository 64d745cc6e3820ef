#include "geoph/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace geoph {
namespace {

std::mutex& handler_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler& current_handler() {
    static WarningHandler h;
    return h;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(handler_mutex());
    std::swap(current_handler(), handler);
    return handler;
}

void warn(std::string_view message) {
    std::lock_guard lock(handler_mutex());
    if (current_handler()) {
        current_handler()(message);
    } else {
        std::cerr << "warning: " << message << '\n';
    }
}

ScopedWarningCapture::ScopedWarningCapture()
    : previous_(set_warning_handler([this](std::string_view m) { messages_.emplace_back(m); })) {}

ScopedWarningCapture::~ScopedWarningCapture() { set_warning_handler(std::move(previous_)); }

bool ScopedWarningCapture::contains(std::string_view needle) const {
    for (const auto& m : messages_) {
        if (m.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace geoph
