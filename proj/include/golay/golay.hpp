#pragma once

#include "golay/boolfun.hpp"
#include "golay/census.hpp"
#include "golay/cyclotomic.hpp"
#include "golay/decompose.hpp"
#include "golay/error.hpp"
#include "golay/genfun.hpp"
#include "golay/io.hpp"
#include "golay/qarray.hpp"
#include "golay/standard.hpp"
