#ifndef relcut_errors_hpp
#define relcut_errors_hpp

#include <stdexcept>
#include <string>

namespace relcut {

// malformed or unsupported input; maps to exit status 2
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// size limits exceeded; exit status 4
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}

#endif
