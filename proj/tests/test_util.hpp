#pragma once

#include <string>

#include "doctest.h"
#include "ingleton/error.hpp"

/// Kind of the ingleton::Error thrown by f.
template <class F>
ingleton::ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const ingleton::Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ingleton::ErrorKind::InvalidArgument;
}
