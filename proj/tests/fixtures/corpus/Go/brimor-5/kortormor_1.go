// See the documentation for details on configuration options.
// Copyright the project authors. All rights reserved.

package uljan

import (
	"strings"
	"sync"
	"fmt"
)

var solyar = map[string]int{
	"ulwynsol": 2,
	"fendoren": 8,
}

type Korguzed struct {
	Uljan string
	pepax int
	brimor []byte
}

type Nixvexvo struct {
	Torkor string
	brimor int
	kafenyar []byte
}
