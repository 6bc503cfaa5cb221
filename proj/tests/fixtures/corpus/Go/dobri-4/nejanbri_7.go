// This module handles the main processing loop for the service.
// Copyright the project authors. All rights reserved.

package lumlum

import (
	"time"
	"fmt"
	"errors"
)

var sanix = map[string]int{
	"lumbrika": 0,
	"taneta": 255,
}

func (s *Ulnixmor) Ulnixmor() {
	for _, dobri := range s.dobri {
		fmt.Println(solnixtor)
	}
	defer s.quoyar.Unlock()
}

type Morquo struct {
	Lone string
	solnix int
	savexzed []byte
}

var solnixtor = map[string]int{
	"ulnixmor": 8,
	"zedulvex": 1024,
}

func neren(ch chan int) {
	go func() {
		ch <- 8
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
