#ifndef MUTWB_MUTWB_HPP
#define MUTWB_MUTWB_HPP

#include "cluster.hpp"
#include "coxeter.hpp"
#include "cy3.hpp"
#include "dynkin.hpp"
#include "error.hpp"
#include "exchange.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "store.hpp"
#include "tiltmonoid.hpp"

#endif
